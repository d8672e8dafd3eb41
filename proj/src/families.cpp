#include "chainsemi/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "chainsemi/classify.hpp"
#include "chainsemi/error.hpp"

namespace chainsemi {

namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw std::invalid_argument(what);
}

std::string params(int n, int r) { return "(n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")"; }

/// All subsets of the pool with the given size, each visited as a sorted
/// vector. The pool itself must be sorted.
template <typename Visit>
void scan_subsets(const std::vector<int>& pool, int size, Visit&& visit) {
  std::vector<int> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(chosen.size()) == size) {
      visit(chosen);
      return;
    }
    int missing = size - static_cast<int>(chosen.size());
    for (std::size_t i = from; i + missing <= pool.size(); ++i) {
      chosen.push_back(pool[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

ChainMap collapse_idempotent(int n, int r, int p, int q) {
  // q is bounded by p+r-2 (image size at most r-1) and by n-1 (q+1 must
  // exist); the family's counting formula pins this reading down.
  require(1 <= p && p <= n - 2 && p + 1 <= q && q <= std::min(p + r - 2, n - 1),
          "collapse_idempotent: parameters outside 1<=p<=n-2, p+1<=q<=min(p+r-2, n-1) at " +
              params(n, r) + " p=" + std::to_string(p) + " q=" + std::to_string(q));
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  for (int x = p; x <= q; ++x) word[x - 1] = x;
  word[q] = p;  // q+1 -> p
  return ChainMap(n, std::move(word));
}

ChainMap two_point_reflection(int n, int p, int q) {
  require(1 <= p && p <= q - 2 && q <= n,
          "two_point_reflection: parameters outside 1<=p<=q-2<=n-2, got p=" + std::to_string(p) +
              " q=" + std::to_string(q) + " n=" + std::to_string(n));
  const int k = std::min(p - 1, q - p - 1);
  const int l = std::min(q - p - 1, n - q);
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  for (int i = 0; i <= k; ++i) word[p + i - 1] = p - i;
  for (int j = 0; j <= l; ++j) word[q + j - 1] = q - j;
  return ChainMap(n, std::move(word));
}

ChainMap bounded_reflection(int n, int r, int p, int q, int s) {
  require(1 <= p && p <= q - 2 && q <= n, "bounded_reflection: need 1<=p<=q-2<=n-2, got p=" +
                                              std::to_string(p) + " q=" + std::to_string(q) +
                                              " n=" + std::to_string(n));
  require(1 <= s && s <= std::min({p, q - p, r - 1}),
          "bounded_reflection: need 1<=s<=min(p, q-p, r-1), got s=" + std::to_string(s) + " at " +
              params(n, r));
  const int u = std::min({r - s, q - p, n - q + 1});
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < s; ++i) word[p + i - 1] = p - i;
  for (int j = 0; j < u; ++j) word[q + j - 1] = q - j;
  return ChainMap(n, std::move(word));
}

ChainMap max_reversing_witness(int n) {
  require(n >= 4, "max_reversing_witness: need n >= 4");
  const int k = n / 3;
  const int i = n - 3 * k;
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  // First run: k+i-1, ..., 2k+2i-3 reversed down to 1.
  for (int j = 0; j <= k + i - 2; ++j) word[k + i - 1 + j - 1] = k + i - 1 - j;
  // Second run: 2k+i, ..., n reversed down to k+i.
  for (int j = 0; j <= k; ++j) word[2 * k + i + j - 1] = 2 * k + i - j;
  return ChainMap(n, std::move(word));
}

ChainMap point_drop(int n, int a, std::span<const int> fixed) {
  require(2 <= a && a <= n, "point_drop: need 2 <= a <= n, got a=" + std::to_string(a));
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  for (int y : fixed) {
    require(1 <= y && y <= n && y != a - 1 && y != a,
            "point_drop: fixed set must avoid {a-1, a} and stay in [1, n]");
    word[y - 1] = y;
  }
  word[a - 1] = a - 1;
  return ChainMap(n, std::move(word));
}

ChainMap wrap_below(int n, std::span<const int> block) {
  require(!block.empty(), "wrap_below: block must be nonempty");
  int lo = block[0], hi = block[0];
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  for (int z : block) {
    require(2 <= z && z <= n - 1, "wrap_below: block must stay inside {2, ..., n-1}");
    word[z - 1] = z;
    lo = std::min(lo, z);
    hi = std::max(hi, z);
  }
  word[hi] = lo - 1;  // hi+1 -> lo-1
  return ChainMap(n, std::move(word));
}

std::string_view to_string(FamilyLabel label) {
  switch (label) {
    case FamilyLabel::Er: return "E_r";
    case FamilyLabel::Fr: return "F_r";
    case FamilyLabel::Gn: return "G_n";
    case FamilyLabel::Hnr: return "H_n^r";
    case FamilyLabel::EIr: return "EI_r";
    case FamilyLabel::FIr: return "FI_r";
    case FamilyLabel::GIr: return "GI_r";
    case FamilyLabel::GIcK: return "GIc_k";
    case FamilyLabel::ClaimedPord: return "CLAIMED_PORD";
    case FamilyLabel::ClaimedIord: return "CLAIMED_IORD";
  }
  return "?";
}

std::optional<FamilyLabel> parse_family_label(std::string_view text) {
  using enum FamilyLabel;
  for (FamilyLabel f : {Er, Fr, Gn, Hnr, EIr, FIr, GIr, GIcK, ClaimedPord, ClaimedIord}) {
    if (text == to_string(f)) return f;
  }
  return std::nullopt;
}

int large_r_threshold(int n) { return n - n / 3; }

namespace {

std::vector<ChainMap> build_Er(int n, int r, const EnumOptions& opts) {
  // Filtered from the enumerated idempotents rather than constructed;
  // the closed form stays a cross-check, not the source.
  std::vector<ChainMap> out;
  for (const ChainMap& m : enumerate_class(n, ClassLabel::POPD, std::nullopt, opts)) {
    ClassProfile p = classify(m);
    if (p.idempotent && p.image_size == r) out.push_back(m);
  }
  return out;
}

std::vector<ChainMap> build_Fr(int n, int r) {
  std::vector<ChainMap> out;
  for (int p = 1; p <= n - 2; ++p) {
    for (int q = p + 1; q <= std::min(p + r - 2, n - 1); ++q) {
      out.push_back(collapse_idempotent(n, r, p, q));
    }
  }
  return out;
}

std::vector<ChainMap> build_Gn(int n) {
  std::vector<ChainMap> out;
  for (int p = 1; p <= n - 2; ++p) {
    for (int q = p + 2; q <= n; ++q) {
      if (p == 1 && q == n) continue;  // that one is a partial identity
      out.push_back(two_point_reflection(n, p, q));
    }
  }
  return out;
}

std::vector<ChainMap> build_Hnr(int n, int r) {
  std::vector<ChainMap> out;
  for (int p = 1; p <= n - 2; ++p) {
    for (int q = p + 2; q <= n; ++q) {
      for (int s = 1; s <= std::min({p, q - p, r - 1}); ++s) {
        if (q == n && s == 1) continue;  // that one is a partial identity
        out.push_back(bounded_reflection(n, r, p, q, s));
      }
    }
  }
  return out;
}

std::vector<ChainMap> build_EIr(int n, int r) {
  std::vector<int> pool(n);
  for (int x = 1; x <= n; ++x) pool[x - 1] = x;
  std::vector<ChainMap> out;
  scan_subsets(pool, r, [&](const std::vector<int>& points) {
    out.push_back(ChainMap::partial_identity(n, points));
  });
  return out;
}

std::vector<ChainMap> build_FIr(int n, int r) {
  std::vector<ChainMap> out;
  for (int a = 2; a <= n; ++a) {
    std::vector<int> pool;
    for (int x = 1; x <= n; ++x) {
      if (x != a - 1 && x != a) pool.push_back(x);
    }
    scan_subsets(pool, r - 1, [&](const std::vector<int>& fixed) {
      out.push_back(point_drop(n, a, fixed));
    });
  }
  return out;
}

std::vector<ChainMap> build_GIk(int n, int k, bool convex_only) {
  std::vector<int> pool;
  for (int x = 2; x <= n - 1; ++x) pool.push_back(x);
  std::vector<ChainMap> out;
  scan_subsets(pool, k - 1, [&](const std::vector<int>& block) {
    if (convex_only && block.back() - block.front() + 1 != static_cast<int>(block.size())) return;
    out.push_back(wrap_below(n, block));
  });
  return out;
}

void append(std::vector<ChainMap>& into, std::vector<ChainMap>&& part) {
  into.insert(into.end(), std::make_move_iterator(part.begin()),
              std::make_move_iterator(part.end()));
}

}  // namespace

GeneratorFamily family(int n, int r, FamilyLabel label, const EnumOptions& opts) {
  if (n < 1) throw std::invalid_argument("family: n must be >= 1");
  GeneratorFamily fam;
  fam.label = label;
  fam.n = n;
  fam.r = r;

  const bool claimed = label == FamilyLabel::ClaimedPord || label == FamilyLabel::ClaimedIord;
  if (claimed) {
    if (r < 3 || r > n - 1) {
      throw std::invalid_argument("family: the claimed generating sets need 3 <= r <= n-1 at " +
                                  params(n, r));
    }
  }
  const bool small_regime = r < large_r_threshold(n);

  switch (label) {
    case FamilyLabel::Er:
      require(1 <= r && r <= n, "family: E_r needs 1 <= r <= n at " + params(n, r));
      fam.elements = build_Er(n, r, opts);
      fam.formula_count = binomial(n, r) * (1ll << (n - r));
      break;
    case FamilyLabel::Fr:
      require(3 <= r && r <= n - 1, "family: F_r needs 3 <= r <= n-1 at " + params(n, r));
      fam.elements = build_Fr(n, r);
      fam.formula_count = static_cast<long long>(2 * n - r - 1) * (r - 2) / 2;
      break;
    case FamilyLabel::Gn:
      require(n >= 4, "family: the reflection family needs n >= 4");
      fam.elements = build_Gn(n);
      fam.formula_count = static_cast<long long>(n) * (n - 3) / 2;
      break;
    case FamilyLabel::Hnr:
      require(3 <= r && small_regime,
              "family: H_n^r lives in the small regime 3 <= r < n - floor(n/3) at " + params(n, r));
      fam.elements = build_Hnr(n, r);
      break;  // no closed form is known for |H_n^r|
    case FamilyLabel::EIr:
      require(1 <= r && r <= n - 1, "family: EI_r needs 1 <= r <= n-1 at " + params(n, r));
      fam.elements = build_EIr(n, r);
      fam.formula_count = binomial(n, r);
      break;
    case FamilyLabel::FIr:
      require(1 <= r && r <= n - 1, "family: FI_r needs 1 <= r <= n-1 at " + params(n, r));
      fam.elements = build_FIr(n, r);
      fam.formula_count = static_cast<long long>(n - 1) * binomial(n - 2, r - 1);
      break;
    case FamilyLabel::GIr:
      require(2 <= r && r <= n - 1, "family: GI_r needs 2 <= r <= n-1 at " + params(n, r));
      fam.elements = build_GIk(n, r, /*convex_only=*/false);
      fam.formula_count = binomial(n - 2, r - 1);
      break;
    case FamilyLabel::GIcK:
      require(2 <= r && r <= n - 1, "family: GIc_k needs 2 <= k <= n-1 at " + params(n, r));
      fam.elements = build_GIk(n, r, /*convex_only=*/true);
      fam.formula_count = n - r;
      break;
    case FamilyLabel::ClaimedPord: {
      append(fam.elements, build_Er(n, r, opts));
      append(fam.elements, build_Fr(n, r));
      if (small_regime) {
        append(fam.elements, build_Hnr(n, r));
      } else {
        append(fam.elements, build_Gn(n));
        fam.formula_count = binomial(n, r) * (1ll << (n - r)) +
                            static_cast<long long>(2 * n - r - 1) * (r - 2) / 2 +
                            static_cast<long long>(n) * (n - 3) / 2;
      }
      break;
    }
    case FamilyLabel::ClaimedIord: {
      append(fam.elements, build_EIr(n, r));
      append(fam.elements, build_FIr(n, r));
      append(fam.elements, build_GIk(n, r, false));
      for (int k = 2; k <= r - 1; ++k) append(fam.elements, build_GIk(n, k, true));
      if (small_regime) {
        append(fam.elements, build_Hnr(n, r));
      } else {
        append(fam.elements, build_Gn(n));
        fam.formula_count = binomial(n, r) + static_cast<long long>(n) * binomial(n - 2, r - 1) +
                            static_cast<long long>(r - 2) * n -
                            (static_cast<long long>(r) * r - r - 2) / 2 +
                            static_cast<long long>(n) * (n - 3) / 2;
      }
      break;
    }
  }

  std::sort(fam.elements.begin(), fam.elements.end());
  if (std::adjacent_find(fam.elements.begin(), fam.elements.end()) != fam.elements.end()) {
    throw inconsistency_error("family " + std::string(to_string(label)) + " at " + params(n, r) +
                              " produced duplicate elements");
  }
  if (fam.formula_count &&
      *fam.formula_count != static_cast<long long>(fam.elements.size())) {
    throw inconsistency_error("family " + std::string(to_string(label)) + " at " + params(n, r) +
                              ": enumerated " + std::to_string(fam.elements.size()) +
                              " elements but the closed form gives " +
                              std::to_string(*fam.formula_count));
  }
  return fam;
}

}  // namespace chainsemi
