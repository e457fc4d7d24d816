#include "qpcluster/word.hpp"

#include <algorithm>

namespace qpc {

Word rotate(const Word& w, std::size_t start) {
  Word r;
  r.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r.push_back(w[(start + i) % w.size()]);
  return r;
}

Word canonical_rotation(const Word& w) {
  if (w.size() < 2) return w;
  std::size_t best = 0;
  const std::size_t n = w.size();
  for (std::size_t cand = 1; cand < n; ++cand) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& x = w[(cand + k) % n];
      const auto& y = w[(best + k) % n];
      if (x == y) continue;
      if (x < y) best = cand;
      break;
    }
  }
  return rotate(w, best);
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i];
  }
  return out;
}

Label composite_label(const Label& a, const Label& b) { return "[" + a + "." + b + "]"; }

Label reversed_label(const Label& a) { return a + "*"; }

}  // namespace qpc
