#include "chainsemi/maximal.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "chainsemi/classify.hpp"
#include "chainsemi/error.hpp"
#include "chainsemi/families.hpp"
#include "packed.hpp"

namespace chainsemi {

namespace {

ClassLabel ambient_class(Side side) {
  return side == Side::Pord ? ClassLabel::PORD : ClassLabel::IORD;
}

void check_ambient(const AmbientSpec& a) {
  if (a.n < 4) throw std::invalid_argument("maximal: need n >= 4");
  if (a.r < 3 || a.r > a.n) throw std::invalid_argument("maximal: need 3 <= r <= n");
}

std::vector<ChainMap> enumerate_ambient(const AmbientSpec& a, const EnumOptions& opts) {
  std::optional<int> bound;
  if (!a.is_whole_monoid()) bound = a.r;
  return enumerate_class(a.n, ambient_class(a.side), bound, opts);
}

FamilyLabel claimed_label(Side side) {
  return side == Side::Pord ? FamilyLabel::ClaimedPord : FamilyLabel::ClaimedIord;
}

/// The claimed minimal generating set of the ambient; for the whole
/// monoid this is the (n, n-1) set together with the identity.
std::vector<ChainMap> claimed_generators(const AmbientSpec& a, const EnumOptions& opts) {
  const int r = a.is_whole_monoid() ? a.n - 1 : a.r;
  std::vector<ChainMap> gens = family(a.n, r, claimed_label(a.side), opts).elements;
  if (a.is_whole_monoid()) gens.push_back(ChainMap::identity(a.n));
  return gens;
}

std::optional<long long> rank_formula(const AmbientSpec& a) {
  const int n = a.n;
  if (a.is_whole_monoid()) return static_cast<long long>(n) * n - n + 1;
  const int r = a.r;
  if (r < large_r_threshold(n)) return std::nullopt;  // no closed form in the small regime
  if (a.side == Side::Pord) {
    return binomial(n, r) * (1ll << (n - r)) +
           static_cast<long long>(2 * n - r - 1) * (r - 2) / 2 +
           static_cast<long long>(n) * (n - 3) / 2;
  }
  return binomial(n, r) + static_cast<long long>(n) * binomial(n - 2, r - 1) +
         static_cast<long long>(r - 2) * n - (static_cast<long long>(r) * r - r - 2) / 2 +
         static_cast<long long>(n) * (n - 3) / 2;
}

}  // namespace

std::string_view to_string(Side side) { return side == Side::Pord ? "PORD" : "IORD"; }

std::string_view to_string(RemovalVariant variant) {
  switch (variant) {
    case RemovalVariant::SingleElement: return "single-element";
    case RemovalVariant::CollapseClass: return "collapse-class";
    case RemovalVariant::ReflectionClass: return "reflection-class";
    case RemovalVariant::BoundedReflectionClass: return "bounded-reflection-class";
    case RemovalVariant::InjBoundedReflectionClass: return "inj-bounded-reflection-class";
  }
  return "?";
}

std::string AmbientSpec::str() const {
  std::string name(to_string(side));
  if (is_whole_monoid()) return name + "_" + std::to_string(n);
  return name + "(" + std::to_string(n) + "," + std::to_string(r) + ")";
}

std::string MaximalDescriptor::str() const {
  std::string out = ambient.str() + " minus " + std::string(to_string(variant));
  if (variant == RemovalVariant::SingleElement) {
    out += " " + (witness ? witness->str() : std::string("?"));
  } else {
    out += " p=" + std::to_string(p) + " q=" + std::to_string(q);
    if (variant == RemovalVariant::BoundedReflectionClass ||
        variant == RemovalVariant::InjBoundedReflectionClass) {
      out += " s=" + std::to_string(s);
    }
  }
  return out;
}

std::vector<MaximalDescriptor> all_descriptors(const AmbientSpec& ambient,
                                               const EnumOptions& opts) {
  check_ambient(ambient);
  const int n = ambient.n;

  if (ambient.is_whole_monoid()) {
    // The whole monoid splits as its deepest proper ideal plus the
    // identity: dropping the identity is maximal, and every maximal
    // subsemigroup of the ideal lifts by re-adjoining the identity.
    std::vector<MaximalDescriptor> out;
    MaximalDescriptor ideal;
    ideal.ambient = ambient;
    ideal.variant = RemovalVariant::SingleElement;
    ideal.witness = ChainMap::identity(n);
    out.push_back(std::move(ideal));
    for (MaximalDescriptor d : all_descriptors({ambient.side, n, n - 1}, opts)) {
      d.ambient = ambient;
      out.push_back(std::move(d));
    }
    return out;
  }

  const int r = ambient.r;
  const bool small_regime = r < large_r_threshold(n);
  std::vector<MaximalDescriptor> out;
  auto singleton = [&](const ChainMap& m) {
    MaximalDescriptor d;
    d.ambient = ambient;
    d.variant = RemovalVariant::SingleElement;
    d.witness = m;
    out.push_back(std::move(d));
  };

  if (ambient.side == Side::Pord) {
    for (const ChainMap& e : family(n, r, FamilyLabel::Er, opts).elements) singleton(e);
    for (int p = 1; p <= n - 2; ++p) {
      for (int q = p + 1; q <= std::min(p + r - 2, n - 1); ++q) {
        MaximalDescriptor d;
        d.ambient = ambient;
        d.variant = RemovalVariant::CollapseClass;
        d.p = p;
        d.q = q;
        out.push_back(std::move(d));
      }
    }
    if (!small_regime) {
      for (int p = 1; p <= n - 2; ++p) {
        for (int q = p + 2; q <= n; ++q) {
          if (p == 1 && q == n) continue;
          MaximalDescriptor d;
          d.ambient = ambient;
          d.variant = RemovalVariant::ReflectionClass;
          d.p = p;
          d.q = q;
          out.push_back(std::move(d));
        }
      }
    } else {
      for (int p = 1; p <= n - 2; ++p) {
        for (int q = p + 2; q <= n; ++q) {
          for (int s = 1; s <= std::min({p, q - p, r - 1}); ++s) {
            if (q == n && s == 1) continue;
            MaximalDescriptor d;
            d.ambient = ambient;
            d.variant = RemovalVariant::BoundedReflectionClass;
            d.p = p;
            d.q = q;
            d.s = s;
            out.push_back(std::move(d));
          }
        }
      }
    }
    return out;
  }

  // Injective side: in the large regime every maximal subsemigroup drops
  // one element of the unique minimal generating set; in the small one
  // the bounded-reflection singletons widen to restriction classes.
  if (!small_regime) {
    for (const ChainMap& m : family(n, r, FamilyLabel::ClaimedIord, opts).elements) singleton(m);
    return out;
  }
  for (FamilyLabel part : {FamilyLabel::EIr, FamilyLabel::FIr, FamilyLabel::GIr}) {
    for (const ChainMap& m : family(n, r, part, opts).elements) singleton(m);
  }
  for (int k = 2; k <= r - 1; ++k) {
    for (const ChainMap& m : family(n, k, FamilyLabel::GIcK, opts).elements) singleton(m);
  }
  for (int p = 1; p <= n - 2; ++p) {
    for (int q = p + 2; q <= n; ++q) {
      for (int s = 1; s <= std::min({p, q - p, r - 1}); ++s) {
        if (q == n && s == 1) continue;
        MaximalDescriptor d;
        d.ambient = ambient;
        d.variant = RemovalVariant::InjBoundedReflectionClass;
        d.p = p;
        d.q = q;
        d.s = s;
        out.push_back(std::move(d));
      }
    }
  }
  return out;
}

std::vector<ChainMap> removal_class(const MaximalDescriptor& d, std::span<const ChainMap> ambient) {
  const int n = d.ambient.n;
  const int effective_r = d.ambient.is_whole_monoid() ? n - 1 : d.ambient.r;

  if (d.variant == RemovalVariant::SingleElement) {
    if (!d.witness) throw std::invalid_argument("removal_class: singleton without a witness");
    std::vector<ChainMap> out;
    for (const ChainMap& a : ambient) {
      if (a == *d.witness) out.push_back(a);
    }
    return out;
  }

  ChainMap pattern(n);
  switch (d.variant) {
    case RemovalVariant::CollapseClass:
      pattern = collapse_idempotent(n, effective_r, d.p, d.q);
      break;
    case RemovalVariant::ReflectionClass:
      pattern = two_point_reflection(n, d.p, d.q);
      break;
    case RemovalVariant::BoundedReflectionClass:
    case RemovalVariant::InjBoundedReflectionClass:
      pattern = bounded_reflection(n, effective_r, d.p, d.q, d.s);
      break;
    case RemovalVariant::SingleElement: break;  // handled above
  }

  const std::vector<int> window = pattern.domain();
  std::vector<ChainMap> out;
  for (const ChainMap& a : ambient) {
    if (restrict_to(a, window) == pattern) out.push_back(a);
  }
  return out;
}

MaximalReport verify_maximal(const MaximalDescriptor& d, const EnumOptions& eopts,
                             const ClosureOptions& copts) {
  check_ambient(d.ambient);
  const std::vector<ChainMap> ambient = enumerate_ambient(d.ambient, eopts);
  const std::vector<ChainMap> removed = removal_class(d, ambient);

  std::vector<ChainMap> rest;
  rest.reserve(ambient.size() - removed.size());
  std::set_difference(ambient.begin(), ambient.end(), removed.begin(), removed.end(),
                      std::back_inserter(rest));

  MaximalReport report;
  report.descriptor = d;
  report.removed = removed.size();
  report.proper = !removed.empty();
  report.closed = rest.empty() || is_closed(rest);
  report.maximal = report.proper;
  for (const ChainMap& x : removed) {
    std::vector<ChainMap> extended = rest;
    extended.push_back(x);
    if (!is_generating(extended, ambient, copts)) {
      report.maximal = false;
      break;
    }
  }
  return report;
}

RankReport necessity_rank_check(const AmbientSpec& ambient, const EnumOptions& eopts,
                                const ClosureOptions& copts) {
  check_ambient(ambient);
  RankReport report;
  report.ambient = ambient;
  report.formula_value = rank_formula(ambient);

  const std::vector<ChainMap> elements = enumerate_ambient(ambient, eopts);
  const std::vector<ChainMap> claimed = claimed_generators(ambient, eopts);
  report.claimed_size = static_cast<long long>(claimed.size());
  report.generates = is_generating(claimed, elements, copts);

  const std::vector<MaximalDescriptor> descriptors = all_descriptors(ambient, eopts);
  report.class_count = static_cast<long long>(descriptors.size());

  // Assign each ambient element the class that removes it. Disjointness
  // of the classes means no element is claimed twice.
  std::vector<std::uint64_t> keys;
  keys.reserve(elements.size());
  for (const ChainMap& m : elements) keys.push_back(detail::pack(m));
  std::vector<int> class_of(elements.size(), -1);
  auto index_of = [&](std::uint64_t key) -> std::ptrdiff_t {
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    return (it != keys.end() && *it == key) ? it - keys.begin() : -1;
  };

  report.classes_disjoint = true;
  bool all_proper = true;
  for (std::size_t c = 0; c < descriptors.size(); ++c) {
    const std::vector<ChainMap> removed = removal_class(descriptors[c], elements);
    if (removed.empty()) all_proper = false;
    for (const ChainMap& m : removed) {
      const std::ptrdiff_t at = index_of(detail::pack(m));
      if (class_of[at] != -1) report.classes_disjoint = false;
      class_of[at] = static_cast<int>(c);
    }
  }

  // One pass over all pair products settles closedness of every
  // complement at once: ambient-minus-class fails exactly when a product
  // lands in the class while neither factor does.
  const int n = ambient.n;
  std::atomic<bool> complements_closed{true};
  const unsigned workers =
      eopts.workers != 0 ? eopts.workers : std::max(1u, std::thread::hardware_concurrency());
  auto run_rows = [&](unsigned worker) {
    for (std::size_t i = worker; i < keys.size(); i += workers) {
      for (std::size_t j = 0; j < keys.size(); ++j) {
        const std::ptrdiff_t at = index_of(detail::compose_packed(n, keys[i], keys[j]));
        if (at < 0) continue;  // cannot happen: ambient is closed
        const int c = class_of[at];
        if (c >= 0 && class_of[i] != c && class_of[j] != c) {
          complements_closed = false;
          return;
        }
      }
    }
  };
  if (workers <= 1) {
    run_rows(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_rows, w);
    for (auto& t : pool) t.join();
  }

  report.classes_closed_proper = all_proper && complements_closed.load();
  report.count_matches = report.class_count == report.claimed_size &&
                         (!report.formula_value || *report.formula_value == report.claimed_size);
  return report;
}

}  // namespace chainsemi
