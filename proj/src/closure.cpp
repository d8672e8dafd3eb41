#include "chainsemi/closure.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_set>

#include "chainsemi/error.hpp"
#include "chainsemi/families.hpp"
#include "packed.hpp"

namespace chainsemi {

namespace {

using detail::compose_packed;
using detail::pack;
using detail::unpack;

unsigned effective_workers(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

int checked_n(std::span<const ChainMap> maps, const char* who) {
  if (maps.empty()) throw std::invalid_argument(std::string(who) + ": empty input");
  const int n = maps.front().n();
  for (const ChainMap& m : maps) {
    if (m.n() != n) throw std::invalid_argument(std::string(who) + ": mixed chain sizes");
  }
  if (n > detail::kPackedMaxN) {
    throw resource_error(std::string(who) + ": the packed product engine supports n <= " +
                         std::to_string(detail::kPackedMaxN));
  }
  return n;
}

std::vector<std::uint64_t> pack_all(std::span<const ChainMap> maps) {
  std::vector<std::uint64_t> keys;
  keys.reserve(maps.size());
  for (const ChainMap& m : maps) keys.push_back(pack(m));
  return keys;
}

// One candidate product discovered during a round.
struct Candidate {
  std::uint64_t element;
  std::uint64_t left;
  std::uint64_t right;
  bool operator<(const Candidate& o) const {
    return std::tie(element, left, right) < std::tie(o.element, o.left, o.right);
  }
};

}  // namespace

bool SemigroupSet::contains(const ChainMap& m) const {
  return std::binary_search(elements.begin(), elements.end(), m);
}

SemigroupSet closure(std::vector<ChainMap> generators, const ClosureOptions& opts) {
  const int n = checked_n(generators, "closure");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  std::vector<std::uint64_t> elems = pack_all(generators);  // discovery order
  std::unordered_set<std::uint64_t> known(elems.begin(), elems.end());
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> provenance;

  std::size_t frontier_begin = 0;  // current frontier is elems[frontier_begin..]
  const unsigned workers = effective_workers(opts.workers);
  int round = 0;

  while (frontier_begin < elems.size()) {
    const std::size_t frontier_end = elems.size();
    if (opts.progress) {
      opts.progress("closure round " + std::to_string(round) + ": " +
                    std::to_string(elems.size()) + " elements, frontier " +
                    std::to_string(frontier_end - frontier_begin));
    }

    // Every product with one factor in the frontier: frontier x known and
    // known x frontier. Workers take frontier slices and collect their
    // candidates privately; the merge below is schedule-independent.
    std::vector<std::vector<Candidate>> found(workers);
    auto run_slice = [&](unsigned worker) {
      std::vector<Candidate>& local = found[worker];
      for (std::size_t f = frontier_begin + worker; f < frontier_end;
           f += static_cast<std::size_t>(workers)) {
        const std::uint64_t fk = elems[f];
        for (std::size_t e = 0; e < frontier_end; ++e) {
          const std::uint64_t ek = elems[e];
          std::uint64_t prod = compose_packed(n, fk, ek);
          if (!known.contains(prod)) local.push_back({prod, fk, ek});
          prod = compose_packed(n, ek, fk);
          if (!known.contains(prod)) local.push_back({prod, ek, fk});
        }
      }
    };
    if (workers <= 1) {
      run_slice(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_slice, w);
      for (auto& t : pool) t.join();
    }

    std::vector<Candidate> merged;
    for (auto& local : found) {
      merged.insert(merged.end(), local.begin(), local.end());
      local.clear();
      local.shrink_to_fit();
    }
    std::sort(merged.begin(), merged.end());

    frontier_begin = frontier_end;
    for (const Candidate& c : merged) {
      if (known.contains(c.element)) continue;  // keeps the least (left, right) pair
      known.insert(c.element);
      elems.push_back(c.element);
      provenance.emplace(c.element, std::make_pair(c.left, c.right));
      if (elems.size() > opts.element_cap) {
        throw resource_error("closure exceeded the element cap of " +
                             std::to_string(opts.element_cap));
      }
    }
    ++round;
  }

  SemigroupSet result;
  result.n = n;
  result.generators = std::move(generators);
  result.elements.reserve(elems.size());
  for (std::uint64_t key : elems) result.elements.push_back(unpack(n, key));
  std::sort(result.elements.begin(), result.elements.end());
  for (const auto& [key, pair] : provenance) {
    result.provenance.emplace(unpack(n, key),
                              std::make_pair(unpack(n, pair.first), unpack(n, pair.second)));
  }
  return result;
}

bool is_generating(const std::vector<ChainMap>& generators, std::span<const ChainMap> target,
                   const ClosureOptions& opts) {
  ClosureOptions bounded = opts;
  // No need to saturate past the target size: one extra element already
  // settles the answer.
  bounded.element_cap = std::min(bounded.element_cap, target.size());
  SemigroupSet grown;
  try {
    grown = closure(generators, bounded);
  } catch (const resource_error&) {
    if (target.size() < opts.element_cap) return false;  // outgrew the target
    throw;
  }
  if (grown.elements.size() != target.size()) return false;
  std::vector<ChainMap> sorted_target(target.begin(), target.end());
  std::sort(sorted_target.begin(), sorted_target.end());
  return grown.elements == sorted_target;
}

bool is_generating(const std::vector<ChainMap>& generators, const SemigroupSet& target,
                   const ClosureOptions& opts) {
  return is_generating(generators, target.elements, opts);
}

namespace {

// Index lookup for a packed, sorted element set.
struct PackedSet {
  int n = 0;
  std::vector<std::uint64_t> keys;  // sorted
  explicit PackedSet(std::span<const ChainMap> elements, const char* who)
      : n(checked_n(elements, who)), keys(pack_all(elements)) {
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
      throw std::invalid_argument(std::string(who) + ": duplicate elements");
    }
  }
  std::ptrdiff_t index_of(std::uint64_t key) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    if (it == keys.end() || *it != key) return -1;
    return it - keys.begin();
  }
};

}  // namespace

bool is_closed(std::span<const ChainMap> elements) {
  PackedSet set(elements, "is_closed");
  for (std::uint64_t a : set.keys) {
    for (std::uint64_t b : set.keys) {
      if (set.index_of(compose_packed(set.n, a, b)) < 0) return false;
    }
  }
  return true;
}

bool is_undecomposable_in(std::span<const ChainMap> elements, const ChainMap& z) {
  PackedSet set(elements, "is_undecomposable_in");
  const std::uint64_t zk = pack(z);
  for (std::uint64_t a : set.keys) {
    for (std::uint64_t b : set.keys) {
      if (a != zk && b != zk && compose_packed(set.n, a, b) == zk) return false;
    }
  }
  return true;
}

std::vector<ChainMap> undecomposables(std::span<const ChainMap> elements) {
  PackedSet set(elements, "undecomposables");
  std::vector<char> decomposable(set.keys.size(), 0);
  for (std::size_t i = 0; i < set.keys.size(); ++i) {
    for (std::size_t j = 0; j < set.keys.size(); ++j) {
      const std::uint64_t prod = compose_packed(set.n, set.keys[i], set.keys[j]);
      const std::ptrdiff_t at = set.index_of(prod);
      if (at < 0) {
        throw std::invalid_argument("undecomposables: set is not closed under products");
      }
      if (prod != set.keys[i] && prod != set.keys[j]) decomposable[at] = 1;
    }
  }
  std::vector<ChainMap> out;
  for (std::size_t i = 0; i < set.keys.size(); ++i) {
    if (!decomposable[i]) out.push_back(unpack(set.n, set.keys[i]));
  }
  return out;  // already canonical: keys were sorted
}

std::vector<ChainMap> undecomposables(const SemigroupSet& S) { return undecomposables(S.elements); }

bool check_gamma_undecomposable(int n, int p, int q, const EnumOptions& opts) {
  const ChainMap gamma = two_point_reflection(n, p, q);
  const std::vector<ChainMap> ambient = enumerate_class(n, ClassLabel::PORD, std::nullopt, opts);
  return is_undecomposable_in(ambient, gamma);
}

}  // namespace chainsemi
