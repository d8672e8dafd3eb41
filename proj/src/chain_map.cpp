#include "chainsemi/chain_map.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace chainsemi {

namespace {

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("chain size must be >= 1, got " + std::to_string(n));
}

}  // namespace

ChainMap::ChainMap(int n) : n_(n), img_(static_cast<std::size_t>(n), 0) { check_n(n); }

ChainMap::ChainMap(int n, std::vector<int> image_word) : n_(n), img_(std::move(image_word)) {
  check_n(n);
  if (img_.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("image word length " + std::to_string(img_.size()) +
                                " does not match n=" + std::to_string(n));
  }
  for (int y : img_) {
    if (y < 0 || y > n) {
      throw std::invalid_argument("image entry " + std::to_string(y) + " outside [0, " +
                                  std::to_string(n) + "]");
    }
  }
}

ChainMap ChainMap::identity(int n) {
  ChainMap m(n);
  for (int x = 1; x <= n; ++x) m.img_[x - 1] = x;
  return m;
}

ChainMap ChainMap::empty_map(int n) { return ChainMap(n); }

ChainMap ChainMap::partial_identity(int n, std::span<const int> points) {
  ChainMap m(n);
  for (int x : points) {
    if (x < 1 || x > n) {
      throw std::invalid_argument("point " + std::to_string(x) + " outside [1, " +
                                  std::to_string(n) + "]");
    }
    m.img_[x - 1] = x;
  }
  return m;
}

int ChainMap::image_of(int x) const {
  if (x < 1 || x > n_) {
    throw std::invalid_argument("point " + std::to_string(x) + " outside [1, " +
                                std::to_string(n_) + "]");
  }
  return img_[x - 1];
}

std::vector<int> ChainMap::domain() const {
  std::vector<int> dom;
  for (int x = 1; x <= n_; ++x) {
    if (img_[x - 1] != kUndefined) dom.push_back(x);
  }
  return dom;
}

std::vector<int> ChainMap::image() const {
  std::vector<int> im;
  for (int y : img_) {
    if (y != kUndefined) im.push_back(y);
  }
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

int ChainMap::domain_size() const {
  int count = 0;
  for (int y : img_) count += (y != kUndefined);
  return count;
}

int ChainMap::image_size() const { return static_cast<int>(image().size()); }

bool ChainMap::is_identity() const {
  for (int x = 1; x <= n_; ++x) {
    if (img_[x - 1] != x) return false;
  }
  return true;
}

std::string ChainMap::str() const {
  std::string out = "n=" + std::to_string(n_) + ":[";
  for (int x = 1; x <= n_; ++x) {
    if (x > 1) out += ',';
    out += std::to_string(img_[x - 1]);
  }
  out += ']';
  return out;
}

ChainMap ChainMap::parse(std::string_view text) {
  auto fail = [&](const char* why) {
    throw std::invalid_argument("cannot parse ChainMap '" + std::string(text) + "': " + why);
  };
  auto parse_int = [&](std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail("bad integer");
    return value;
  };

  if (!text.starts_with("n=")) fail("missing 'n=' prefix");
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) fail("missing ':'");
  int n = parse_int(text.substr(2, colon - 2));
  std::string_view body = text.substr(colon + 1);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') fail("missing brackets");
  body = body.substr(1, body.size() - 2);

  std::vector<int> word;
  if (!body.empty()) {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = body.find(',', start);
      std::string_view item =
          comma == std::string_view::npos ? body.substr(start) : body.substr(start, comma - start);
      word.push_back(parse_int(item));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return ChainMap(n, std::move(word));
}

ChainMap compose(const ChainMap& a, const ChainMap& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("size mismatch in compose: n=" + std::to_string(a.n()) +
                                " vs n=" + std::to_string(b.n()));
  }
  std::vector<int> word(static_cast<std::size_t>(a.n()), 0);
  for (int x = 1; x <= a.n(); ++x) {
    int y = a.image_of(x);
    if (y != ChainMap::kUndefined) word[x - 1] = b.image_of(y);
  }
  return ChainMap(a.n(), std::move(word));
}

ChainMap restrict_to(const ChainMap& a, std::span<const int> points) {
  std::vector<int> word(static_cast<std::size_t>(a.n()), 0);
  for (int x : points) {
    if (x < 1 || x > a.n()) {
      throw std::invalid_argument("restriction point " + std::to_string(x) + " outside [1, " +
                                  std::to_string(a.n()) + "]");
    }
    word[x - 1] = a.image_of(x);
  }
  return ChainMap(a.n(), std::move(word));
}

ChainMap restrict_to_interval(const ChainMap& a, int lo, int hi) {
  std::vector<int> points;
  for (int x = std::max(lo, 1); x <= std::min(hi, a.n()); ++x) points.push_back(x);
  return restrict_to(a, points);
}

std::size_t ChainMapHash::operator()(const ChainMap& m) const noexcept {
  // FNV-1a over n and the image word.
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::size_t>(m.n()));
  for (int y : m.word()) mix(static_cast<std::size_t>(y));
  return h;
}

}  // namespace chainsemi
