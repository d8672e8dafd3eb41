#include "chainsemi/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "chainsemi/error.hpp"

namespace chainsemi {

std::string_view to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::PD: return "PD";
    case ClassLabel::PC: return "PC";
    case ClassLabel::PMD: return "PMD";
    case ClassLabel::POPD: return "POPD";
    case ClassLabel::PORD: return "PORD";
    case ClassLabel::IORD: return "IORD";
    case ClassLabel::PRDStar: return "PRD*";
    case ClassLabel::PORDStar: return "PORD*";
    case ClassLabel::IORDStar: return "IORD*";
  }
  return "?";
}

std::optional<ClassLabel> parse_class_label(std::string_view text) {
  using enum ClassLabel;
  for (ClassLabel c : {PD, PC, PMD, POPD, PORD, IORD, PRDStar, PORDStar, IORDStar}) {
    if (text == to_string(c)) return c;
  }
  return std::nullopt;
}

ClassProfile classify(const ChainMap& a) {
  ClassProfile p;
  std::vector<int> dom = a.domain();
  const int t = static_cast<int>(dom.size());

  std::vector<int> word(dom.size());
  for (int i = 0; i < t; ++i) word[i] = a.image_of(dom[i]);

  p.order_preserving = std::is_sorted(word.begin(), word.end());
  p.order_reversing = std::is_sorted(word.rbegin(), word.rend());

  // Cyclic descent/ascent counts over the image sequence, wraparound
  // pair included. At most one descent means the sequence is cyclic, at
  // most one ascent anti-cyclic.
  int descents = 0;
  int ascents = 0;
  for (int i = 0; i < t; ++i) {
    int next = word[(i + 1) % t];
    if (next < word[i]) ++descents;
    if (next > word[i]) ++ascents;
  }
  p.orientation_preserving = descents <= 1;
  p.orientation_reversing = ascents <= 1;

  p.order_decreasing = true;
  for (int i = 0; i < t; ++i) {
    if (word[i] > dom[i]) p.order_decreasing = false;
  }

  std::vector<int> values = word;
  std::sort(values.begin(), values.end());
  p.image_size = static_cast<int>(std::unique(values.begin(), values.end()) - values.begin());
  p.injective = p.image_size == t;

  p.idempotent = compose(a, a) == a;
  return p;
}

bool in_class(const ClassProfile& p, ClassLabel label) {
  switch (label) {
    case ClassLabel::PD: return p.order_decreasing;
    case ClassLabel::PC: return p.order_decreasing && p.order_preserving;
    case ClassLabel::PMD: return p.order_decreasing && p.monotone();
    case ClassLabel::POPD: return p.order_decreasing && p.orientation_preserving;
    case ClassLabel::PORD: return p.order_decreasing && p.oriented();
    case ClassLabel::IORD: return p.order_decreasing && p.oriented() && p.injective;
    case ClassLabel::PORDStar:
      return p.order_decreasing && p.oriented() && !p.orientation_preserving;
    case ClassLabel::PRDStar:
      return p.order_decreasing && p.oriented() && !p.orientation_preserving && !p.monotone();
    case ClassLabel::IORDStar:
      return p.order_decreasing && p.oriented() && !p.orientation_preserving && p.injective;
  }
  return false;
}

std::vector<int> fix_points(const ChainMap& a) {
  std::vector<int> fix;
  for (int x = 1; x <= a.n(); ++x) {
    if (a.image_of(x) == x) fix.push_back(x);
  }
  return fix;
}

std::vector<std::vector<int>> kernel_partition(const ChainMap& a) {
  std::map<int, std::vector<int>> blocks;  // image value -> preimage points
  for (int x = 1; x <= a.n(); ++x) {
    int y = a.image_of(x);
    if (y != ChainMap::kUndefined) blocks[y].push_back(x);
  }
  std::vector<std::vector<int>> kernel;
  kernel.reserve(blocks.size());
  for (auto& [value, block] : blocks) kernel.push_back(std::move(block));
  std::sort(kernel.begin(), kernel.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.front() < rhs.front(); });
  return kernel;
}

int opd(const ChainMap& a) {
  ClassProfile p = classify(a);
  if (!in_class(p, ClassLabel::POPD) || a.is_empty_map()) {
    throw std::domain_error("opd is defined only for non-empty maps in POPD_n; got " + a.str());
  }
  for (int m = a.n(); m >= 1; --m) {
    if (classify(restrict_to_interval(a, 1, m)).order_preserving) return m;
  }
  throw inconsistency_error("opd: no admissible degree for " + a.str());
}

int ord_degree(const ChainMap& a) {
  ClassProfile p = classify(a);
  if (!in_class(p, ClassLabel::PORDStar)) {
    throw std::domain_error("ord is defined only on PORD_n \\ POPD_n; got " + a.str());
  }
  const std::vector<int> im = a.image();
  const int top = im.back();
  for (int m = a.n() - 1; m >= 1; --m) {
    if (a.image_of(m + 1) != top) continue;
    ClassProfile q = classify(restrict_to_interval(a, 1, m));
    if (q.order_decreasing && q.monotone()) return m;
  }
  throw inconsistency_error("ord: no admissible degree for " + a.str());
}

}  // namespace chainsemi
