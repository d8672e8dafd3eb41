#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chainsemi/chain_map.hpp"
#include "chainsemi/enumerate.hpp"

namespace chainsemi {

struct ClosureOptions {
  /// Hard ceiling on the number of elements a closure may reach.
  std::size_t element_cap = 2'000'000;
  /// 0 means use the available hardware parallelism.
  unsigned workers = 0;
  /// Invoked once per saturation round with a short status line.
  std::function<void(const std::string&)> progress;
};

/// A finite subsemigroup, closed under composition, with one recorded
/// two-factor product per non-generator element.
struct SemigroupSet {
  int n = 0;
  std::vector<ChainMap> elements;    // canonical order
  std::vector<ChainMap> generators;  // canonical order, subset of elements
  /// element -> (left, right) with compose(left, right) == element; both
  /// factors were discovered in an earlier saturation round.
  std::unordered_map<ChainMap, std::pair<ChainMap, ChainMap>, ChainMapHash> provenance;

  bool contains(const ChainMap& m) const;
};

/// Breadth-first saturation of the generators under composition. The
/// result is canonical: independent of generator order and of the worker
/// count. Throws resource_error past the element cap, and for chains
/// longer than the packed-word engine supports (n > 15).
SemigroupSet closure(std::vector<ChainMap> generators, const ClosureOptions& opts = {});

/// Whether the generators saturate exactly to the target element set.
bool is_generating(const std::vector<ChainMap>& generators, std::span<const ChainMap> target,
                   const ClosureOptions& opts = {});
bool is_generating(const std::vector<ChainMap>& generators, const SemigroupSet& target,
                   const ClosureOptions& opts = {});

/// Whether every pairwise product stays inside the set.
bool is_closed(std::span<const ChainMap> elements);

/// Whether no product x*y with x != z and y != z equals z, scanning all
/// pairs of the (closed) set.
bool is_undecomposable_in(std::span<const ChainMap> elements, const ChainMap& z);

/// The elements z of the closed set S with z = xy forcing x = z or y = z.
/// One streamed pass over all pair products; throws std::invalid_argument
/// if a product escapes the set.
std::vector<ChainMap> undecomposables(const SemigroupSet& S);
std::vector<ChainMap> undecomposables(std::span<const ChainMap> elements);

/// Brute-force check that the two-point reflection on (p, q) is
/// undecomposable inside the enumerated ambient PORD_n.
bool check_gamma_undecomposable(int n, int p, int q, const EnumOptions& opts = {});

}  // namespace chainsemi
