#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chainsemi/chain_map.hpp"
#include "chainsemi/closure.hpp"
#include "chainsemi/enumerate.hpp"

namespace chainsemi {

enum class Side { Pord, Iord };
std::string_view to_string(Side side);

/// Which ambient semigroup a descriptor talks about. r == n denotes the
/// whole monoid (image bound n is no bound at all).
struct AmbientSpec {
  Side side = Side::Pord;
  int n = 0;
  int r = 0;
  bool is_whole_monoid() const { return r == n; }
  std::string str() const;
};

enum class RemovalVariant {
  SingleElement,              // one undecomposable generator (or 1_n)
  CollapseClass,              // maps restricting to a collapse idempotent
  ReflectionClass,            // maps restricting to a two-point reflection
  BoundedReflectionClass,     // maps restricting to a bounded reflection
  InjBoundedReflectionClass,  // the injective part of the previous class
};
std::string_view to_string(RemovalVariant variant);

/// One claimed maximal subsemigroup: ambient minus a removal class.
struct MaximalDescriptor {
  AmbientSpec ambient;
  RemovalVariant variant{};
  int p = 0, q = 0, s = 0;           // class parameters, when applicable
  std::optional<ChainMap> witness;   // the removed element, when singleton
  std::string str() const;
};

/// Every claimed maximal subsemigroup of the ambient, in a fixed order.
/// For the whole monoid this is the ideal (drop the identity) plus every
/// (n, n-1) descriptor re-read inside the monoid.
std::vector<MaximalDescriptor> all_descriptors(const AmbientSpec& ambient,
                                               const EnumOptions& opts = {});

/// The exact subset removed from the ambient enumeration by the
/// descriptor, computed by restriction tests.
std::vector<ChainMap> removal_class(const MaximalDescriptor& d, std::span<const ChainMap> ambient);

struct MaximalReport {
  MaximalDescriptor descriptor;
  std::size_t removed = 0;
  bool closed = false;   // the complement is a subsemigroup
  bool proper = false;   // something was removed
  bool maximal = false;  // adding back any removed element regenerates
  bool ok() const { return closed && proper && maximal; }
};

MaximalReport verify_maximal(const MaximalDescriptor& d, const EnumOptions& eopts = {},
                             const ClosureOptions& copts = {});

/// The rank bookkeeping for one ambient semigroup: the claimed set
/// generates, the removal classes are pairwise disjoint complements of
/// proper subsemigroups, their number matches the claimed set's size,
/// and (large regime only) that size matches the closed form.
struct RankReport {
  AmbientSpec ambient;
  std::optional<long long> formula_value;  // absent in the small regime
  long long claimed_size = 0;
  long long class_count = 0;
  bool generates = false;
  bool classes_closed_proper = false;
  bool classes_disjoint = false;
  bool count_matches = false;  // class_count == claimed_size == formula (when present)
  bool ok() const { return generates && classes_closed_proper && classes_disjoint && count_matches; }
};

RankReport necessity_rank_check(const AmbientSpec& ambient, const EnumOptions& eopts = {},
                                const ClosureOptions& copts = {});

}  // namespace chainsemi
