#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "chainsemi/chain_map.hpp"

namespace chainsemi {

/// Predicate bundle placing a map in the class lattice. Computed once by
/// classify(); all fields are plain observations of the map.
struct ClassProfile {
  bool order_preserving = false;
  bool order_reversing = false;
  bool orientation_preserving = false;
  bool orientation_reversing = false;
  bool order_decreasing = false;
  bool injective = false;
  bool idempotent = false;
  int image_size = 0;

  bool monotone() const { return order_preserving || order_reversing; }
  bool oriented() const { return orientation_preserving || orientation_reversing; }

  bool operator==(const ClassProfile&) const = default;
};

/// The semigroups of interest. Every one of them lives inside PD_n
/// (the order-decreasing maps); the starred classes strip the
/// orientation-preserving part.
enum class ClassLabel {
  PD,        // order-decreasing
  PC,        // order-preserving and decreasing
  PMD,       // monotone and decreasing
  POPD,      // orientation-preserving and decreasing
  PORD,      // oriented and decreasing
  IORD,      // injective, oriented, decreasing
  PRDStar,   // PORD \ POPD, minus the monotone maps
  PORDStar,  // PORD \ POPD
  IORDStar,  // IORD \ IOPD
};

std::string_view to_string(ClassLabel label);
/// Accepts the text forms "PD", "PC", "PMD", "POPD", "PORD", "IORD",
/// "PRD*", "PORD*", "IORD*".
std::optional<ClassLabel> parse_class_label(std::string_view text);

ClassProfile classify(const ChainMap& a);
bool in_class(const ClassProfile& profile, ClassLabel label);

/// Fixed points {x in dom(a) : xa = x}, ascending.
std::vector<int> fix_points(const ChainMap& a);

/// Kernel partition of dom(a) into preimage classes. Blocks are sorted
/// by their least element, which for monotone maps is the convex ordered
/// form of the partition.
std::vector<std::vector<int>> kernel_partition(const ChainMap& a);

/// Order-preserving degree: the largest m with a|[1,m] order-preserving.
/// Requires a in POPD_n and a != 0_n; throws std::domain_error otherwise.
int opd(const ChainMap& a);

/// Order-reversing degree: the largest m with a|[1,m] monotone decreasing
/// and max(im(a)) = a(m+1). Requires a in PORD_n \ POPD_n; throws
/// std::domain_error otherwise, and inconsistency_error if no m exists.
int ord_degree(const ChainMap& a);

}  // namespace chainsemi
