#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chainsemi {

/// A partial transformation on the chain {1 < 2 < ... < n}.
///
/// The map is stored as its image word: entry x (1-based) is either 0,
/// meaning x is undefined, or the point x maps to. The all-zero word is
/// the empty map 0_n, the word (1, 2, ..., n) the identity 1_n.
///
/// ChainMap is an immutable value: all operations return new maps, and
/// values can be shared freely between threads.
class ChainMap {
 public:
  static constexpr int kUndefined = 0;

  ChainMap() = default;

  /// The empty map on {1, ..., n}.
  explicit ChainMap(int n);

  /// Builds a map from its image word. Throws std::invalid_argument if
  /// the word length differs from n or an entry lies outside [0, n].
  ChainMap(int n, std::vector<int> image_word);

  static ChainMap identity(int n);
  static ChainMap empty_map(int n);
  /// 1_Y: the identity restricted to the given points.
  static ChainMap partial_identity(int n, std::span<const int> points);

  int n() const { return n_; }

  /// Image of x, or 0 when x is undefined. x must lie in [1, n].
  int image_of(int x) const;
  bool defined(int x) const { return image_of(x) != kUndefined; }

  std::vector<int> domain() const;  // ascending
  std::vector<int> image() const;   // ascending, distinct values
  int domain_size() const;
  int image_size() const;

  bool is_empty_map() const { return domain_size() == 0; }
  bool is_identity() const;

  const std::vector<int>& word() const { return img_; }

  bool operator==(const ChainMap&) const = default;
  /// Canonical order: by n, then lexicographic on the image word.
  auto operator<=>(const ChainMap&) const = default;

  /// Canonical text form, e.g. "n=4:[1,0,3,2]".
  std::string str() const;
  /// Parses the canonical text form. Throws std::invalid_argument on
  /// malformed input.
  static ChainMap parse(std::string_view text);

 private:
  int n_ = 0;
  std::vector<int> img_;
};

/// Composition as a right action: x(ab) = (xa)b, i.e. apply a, then b.
/// dom(ab) = {x in dom(a) : xa in dom(b)}. Throws std::invalid_argument
/// when the chain sizes differ.
ChainMap compose(const ChainMap& a, const ChainMap& b);

/// Restriction of a to Y ∩ dom(a). Points must lie in [1, n].
ChainMap restrict_to(const ChainMap& a, std::span<const int> points);

/// Restriction to the interval [lo, hi] (empty interval when lo > hi).
ChainMap restrict_to_interval(const ChainMap& a, int lo, int hi);

struct ChainMapHash {
  std::size_t operator()(const ChainMap& m) const noexcept;
};

}  // namespace chainsemi
