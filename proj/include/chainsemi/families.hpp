#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "chainsemi/chain_map.hpp"
#include "chainsemi/enumerate.hpp"

namespace chainsemi {

// ---------------------------------------------------------------------
// Named generator constructors. Parameter ranges follow the defining
// inequalities; violations throw std::invalid_argument.
// ---------------------------------------------------------------------

/// The idempotent that fixes [p, q] pointwise and collapses q+1 onto p.
/// Needs 1 <= p <= n-2 and p+1 <= q <= p+r-2 <= n-1; its image size is
/// q-p+1 <= r-1.
ChainMap collapse_idempotent(int n, int r, int p, int q);

/// The injective map fixing p and q that reflects as long a run as fits
/// below each fixed point: p+i -> p-i for i <= min(p-1, q-p-1) and
/// q+j -> q-j for j <= min(q-p-1, n-q). Needs 1 <= p <= q-2 <= n-2.
ChainMap two_point_reflection(int n, int p, int q);

/// The image-bounded variant of the reflection: s points reflect below p
/// and u = min(r-s, q-p, n-q+1) points below q, so the image size is
/// s+u <= r. Needs 1 <= p <= q-2 <= n-2 and 1 <= s <= min(p, q-p, r-1).
ChainMap bounded_reflection(int n, int r, int p, int q, int s);

/// The two-run reversing map attaining the maximal image size n - floor(n/3)
/// among orientation-reversing non-monotone order-decreasing maps. n >= 4.
ChainMap max_reversing_witness(int n);

/// Identity on the given fixed set plus a -> a-1. Needs 2 <= a <= n and
/// a fixed set avoiding {a-1, a}.
ChainMap point_drop(int n, int a, std::span<const int> fixed);

/// Identity on the block plus max(block)+1 -> min(block)-1. The block
/// must be a nonempty subset of {2, ..., n-1}.
ChainMap wrap_below(int n, std::span<const int> block);

// ---------------------------------------------------------------------
// Enumerated families.
// ---------------------------------------------------------------------

enum class FamilyLabel {
  Er,           // idempotents of image size exactly r
  Fr,           // collapse idempotents
  Gn,           // two-point reflections (the one fixing {1, n} excluded)
  Hnr,          // bounded reflections, small-r regime
  EIr,          // partial identities of rank r
  FIr,          // point drops with r-1 fixed points
  GIr,          // wrap maps with blocks of size r-1
  GIcK,         // wrap maps with convex blocks of size k-1
  ClaimedPord,  // the generating set claimed for PORD(n,r)
  ClaimedIord,  // the generating set claimed for IORD(n,r)
};

std::string_view to_string(FamilyLabel label);
/// Accepts "E_r", "F_r", "G_n", "H_n^r", "EI_r", "FI_r", "GI_r", "GIc_k",
/// "CLAIMED_PORD", "CLAIMED_IORD".
std::optional<FamilyLabel> parse_family_label(std::string_view text);

struct GeneratorFamily {
  FamilyLabel label{};
  int n = 0;
  int r = 0;  // the family's size parameter (k for the convex wrap family)
  std::vector<ChainMap> elements;  // canonical order, duplicates rejected
  std::optional<long long> formula_count;
};

/// Smallest r of the large regime: families based on the two-point
/// reflections fit into PORD(n,r) exactly when r >= n - floor(n/3).
int large_r_threshold(int n);

/// Enumerates the named family. The claimed generating sets pick the
/// regime from (n, r) and require 3 <= r <= n-1; the bounded-reflection
/// family requires the small regime. The idempotent family is produced
/// by filtering the enumerated idempotents (so it needs n within the
/// enumeration cap); every other family is constructed directly.
GeneratorFamily family(int n, int r, FamilyLabel label, const EnumOptions& opts = {});

}  // namespace chainsemi
