#include "chainsemi/factorize.hpp"

#include <algorithm>
#include <stdexcept>

#include "chainsemi/classify.hpp"
#include "chainsemi/error.hpp"
#include "chainsemi/families.hpp"

namespace chainsemi {

namespace {

Factorization factorize_core(const ChainMap& a, int r, bool injective_variant) {
  const int n = a.n();
  const ClassProfile profile = classify(a);
  const char* who = injective_variant ? "factorize_iord" : "factorize_pord";

  if (r < 3 || r > n) {
    throw std::invalid_argument(std::string(who) + ": need 3 <= r <= n");
  }
  const bool in_star = profile.order_decreasing && profile.oriented() &&
                       !profile.orientation_preserving &&
                       (!injective_variant || profile.injective);
  if (!in_star || profile.image_size > r) {
    throw std::domain_error(std::string(who) + ": " + a.str() +
                            " is not a non-orientation-preserving member of the (n,r) class");
  }

  Factorization f;
  f.input = a;
  f.t = profile.image_size;

  // The construction anchors at the first preimage of the top image
  // value: everything at or after it reverses downward, everything
  // before it forms the low reversed run.
  const std::vector<int> values = a.image();  // ascending
  const int top = values.back();
  int min_top_preimage = 0;
  for (int x = 1; x <= n; ++x) {
    if (a.image_of(x) == top) {
      min_top_preimage = x;
      break;
    }
  }
  f.m = min_top_preimage - 1;
  const int m = f.m;

  // Split index: values attained on [1, m] form a prefix of the sorted
  // image; the anchor value a(min dom) tops that prefix unless nothing
  // lives below the boundary, in which case the least image value is
  // reached only from the right and s = 1.
  const std::vector<int> dom = a.domain();
  if (dom.front() > m) {
    f.s = 1;
  } else {
    const int anchor = a.image_of(dom.front());
    f.s = static_cast<int>(std::find(values.begin(), values.end(), anchor) - values.begin()) + 1;
  }
  f.p = values[f.s - 1];
  const int s = f.s, t = f.t, p = f.p;
  if (s > t - 1 || s > p || p + s > m + 1 || m + t - s > n || p >= m - t + s + 2) {
    throw inconsistency_error(std::string(who) + ": staircase bounds fail for " + a.str());
  }

  // Image labels: a_1..a_s walk the low prefix downward from p, and
  // a_{s+1}..a_t walk the remaining values downward from the top.
  std::vector<int> label(t + 1, 0);
  for (int i = 1; i <= s; ++i) label[i] = values[s - i];
  for (int j = 1; j <= t - s; ++j) label[s + j] = values[t - j];

  // Kernel blocks in domain order. Block i <= s collects the preimage of
  // label i (inside [1, m] for i == 1); block s+j the preimage of label
  // s+j; block t+1 the right-hand stragglers mapping back to p.
  std::vector<std::vector<int>> block(t + 2);
  for (int x : dom) {
    const int y = a.image_of(x);
    if (y == p) {
      block[x <= m ? 1 : t + 1].push_back(x);
      continue;
    }
    const int at = static_cast<int>(
        std::find(label.begin() + 1, label.end(), y) - label.begin());
    block[at].push_back(x);
  }
  for (int i = 2; i <= s; ++i) {
    if (block[i].empty() || block[i].back() > m) {
      throw inconsistency_error(std::string(who) + ": low block escapes the boundary for " +
                                a.str());
    }
  }

  // beta: staircase the blocks, p..p+s-1 then m+1..m+t-s, stragglers to p.
  std::vector<int> beta_word(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= s; ++i) {
    for (int x : block[i]) beta_word[x - 1] = p + i - 1;
  }
  for (int j = 1; j <= t - s; ++j) {
    for (int x : block[s + j]) beta_word[x - 1] = m + j;
  }
  for (int x : block[t + 1]) beta_word[x - 1] = p;
  f.beta = ChainMap(n, std::move(beta_word));

  // gamma: reflect both staircase runs downward.
  std::vector<int> gamma_word(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < s; ++i) gamma_word[p + i - 1] = p - i;
  for (int j = 1; j <= t - s; ++j) gamma_word[m + j - 1] = m + 2 - j;
  f.gamma = ChainMap(n, std::move(gamma_word));

  // delta: relabel the reflected staircase onto the original values.
  std::vector<int> delta_word(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= s; ++i) delta_word[p - i] = label[i];          // p-i+1 -> a_i
  for (int j = 1; j <= t - s; ++j) delta_word[m + 1 - j] = label[s + j];  // m+2-j -> a_{s+j}
  f.delta = ChainMap(n, std::move(delta_word));

  f.small_regime = r < large_r_threshold(n);
  f.gamma_source = f.small_regime ? bounded_reflection(n, r, p, m + 1, s)
                                  : two_point_reflection(n, p, m + 1);
  f.y_mask = f.gamma.domain();

  if (compose(compose(f.beta, f.gamma), f.delta) != a) {
    throw inconsistency_error(std::string(who) + ": decomposition failed to recompose " + a.str());
  }
  return f;
}

}  // namespace

Factorization factorize_pord(const ChainMap& a, int r) { return factorize_core(a, r, false); }

Factorization factorize_iord(const ChainMap& a, int r) { return factorize_core(a, r, true); }

}  // namespace chainsemi
