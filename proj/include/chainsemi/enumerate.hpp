#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chainsemi/chain_map.hpp"
#include "chainsemi/classify.hpp"

namespace chainsemi {

/// Knobs for the brute-force enumeration paths.
struct EnumOptions {
  /// Largest n the enumerator will materialize. (n+1)! candidate maps are
  /// scanned, so the default keeps a full run well under a second.
  int cap = 8;
  /// 0 means use the available hardware parallelism.
  unsigned workers = 0;
};

/// One counted quantity, optionally compared against a closed form.
struct CountReport {
  int n = 0;
  int r = -1;  // -1 when the quantity has no r parameter
  std::string quantity;
  std::string method;  // "enumeration" or "witness+bound"
  long long enumerated_count = 0;
  std::optional<long long> formula_value;
  bool match = true;  // formula absent, or enumerated == formula
};

long long binomial(int n, int k);
long long factorial(int n);

/// All members of the class on {1,...,n} with image size at most r_bound
/// (no bound when absent), in canonical order. Only order-decreasing
/// candidates are generated, a space of (n+1)! words. Throws
/// resource_error when n exceeds the cap.
std::vector<ChainMap> enumerate_class(int n, ClassLabel label,
                                      std::optional<int> r_bound = std::nullopt,
                                      const EnumOptions& opts = {});

/// Counts idempotents of PORD_n with image size exactly r and compares
/// them with the closed form C(n,r)*2^(n-r). Requires 1 <= r <= n.
CountReport count_idempotents(int n, int r, const EnumOptions& opts = {});

/// The largest image size over the orientation-reversing, non-monotone,
/// order-decreasing maps, compared against n - floor(n/3). Enumerates
/// when n is within the cap; otherwise verifies the construction witness
/// together with the degree-splitting upper bound. Requires n >= 4.
CountReport max_reversing_image(int n, const EnumOptions& opts = {});

struct HTableRow {
  int n = 0;
  int r = 0;
  long long count = 0;
};

/// Number of admissible (p, q, s) parameter triples for the bounded
/// reflection family on (n, r). Pure arithmetic, no maps materialized.
long long h_family_count(int n, int r);

/// Rows (n, r, |H|) for every n <= n_max and every r in the small-r
/// regime 3 <= r < n - floor(n/3). Requires n_max >= 6.
std::vector<HTableRow> count_H_table(int n_max);

}  // namespace chainsemi
