#include "qpcluster/path_algebra.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qpc {

// ---------------------------------------------------------------- NCPoly

NCPoly NCPoly::monomial(Word w, Rational c) {
  NCPoly p;
  p.add(w, c);
  return p;
}

void NCPoly::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t NCPoly::min_length() const {
  std::size_t m = 0;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (first || w.size() < m) m = w.size();
    first = false;
  }
  return m;
}

std::size_t NCPoly::max_length() const {
  std::size_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.size());
  return m;
}

NCPoly NCPoly::truncated(std::size_t max_len) const {
  NCPoly out;
  for (const auto& [w, c] : terms_)
    if (w.size() <= max_len) out.terms_.emplace(w, c);
  return out;
}

NCPoly NCPoly::homogeneous_part(std::size_t len) const {
  NCPoly out;
  for (const auto& [w, c] : terms_)
    if (w.size() == len) out.terms_.emplace(w, c);
  return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  return out;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.get_str() << ')' << ' ' << format_word(w);
  }
  return os.str();
}

// ------------------------------------------------------------- Potential

void Potential::add_cycle(const Word& w, const Rational& c) {
  if (c == 0 || w.empty()) return;
  if (valid_to_ != kExact && static_cast<long long>(w.size()) > valid_to_) return;
  Word key = canonical_rotation(w);
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Potential::coefficient(const Word& cycle) const {
  auto it = terms_.find(canonical_rotation(cycle));
  return it == terms_.end() ? Rational(0) : it->second;
}

void Potential::set_valid_to(int n) {
  if (n < 0) throw std::invalid_argument("truncation order must be non-negative");
  valid_to_ = n;
  if (n == kExact) return;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (static_cast<long long>(it->first.size()) > n)
      it = terms_.erase(it);
    else
      ++it;
  }
}

std::size_t Potential::min_length() const {
  std::size_t m = 0;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (first || w.size() < m) m = w.size();
    first = false;
  }
  return m;
}

std::size_t Potential::max_length() const {
  std::size_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.size());
  return m;
}

Potential Potential::homogeneous_part(std::size_t len) const {
  Potential out(valid_to_);
  for (const auto& [w, c] : terms_)
    if (w.size() == len) out.terms_.emplace(w, c);
  return out;
}

Potential& Potential::operator+=(const Potential& o) {
  const int v = std::min(valid_to_, o.valid_to_);
  set_valid_to(v);
  for (const auto& [w, c] : o.terms_) add_cycle(w, c);
  return *this;
}

Potential& Potential::operator-=(const Potential& o) {
  const int v = std::min(valid_to_, o.valid_to_);
  set_valid_to(v);
  for (const auto& [w, c] : o.terms_) add_cycle(w, -c);
  return *this;
}

Potential& Potential::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

std::string Potential::to_string() const {
  std::ostringstream os;
  if (terms_.empty()) {
    os << "0";
  } else {
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << '(' << c.get_str() << ')' << ' ' << format_word(w);
    }
  }
  if (valid_to_ != kExact) os << "  [valid to length " << valid_to_ << "]";
  return os.str();
}

// ------------------------------------------------------------ operations

Grading grading_of(const Quiver& q, long long degree) {
  Grading g;
  g.degree = degree;
  for (const auto& a : q.arrows()) g.weights[a.label] = a.weight;
  return g;
}

NCPoly cyclic_derivative(const Quiver& q, const Potential& w, const Label& a) {
  if (!q.has_arrow(a)) throw std::out_of_range("cyclic_derivative: unknown arrow '" + a + "'");
  NCPoly out;
  for (const auto& [u, c] : w.terms()) {
    // u = b a c at position i  ->  c b
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] != a) continue;
      Word cb(u.begin() + static_cast<long>(i) + 1, u.end());
      cb.insert(cb.end(), u.begin(), u.begin() + static_cast<long>(i));
      out.add(cb, c);
    }
  }
  return out;
}

std::vector<std::pair<Label, NCPoly>> jacobi_generators(const Quiver& q, const Potential& w) {
  std::vector<std::pair<Label, NCPoly>> out;
  out.reserve(q.arrow_count());
  for (const auto& arr : q.arrows()) out.emplace_back(arr.label, cyclic_derivative(q, w, arr.label));
  return out;
}

long long word_weight(const Word& w, const Grading& g) {
  long long total = 0;
  for (const auto& l : w) {
    auto it = g.weights.find(l);
    if (it == g.weights.end()) throw std::invalid_argument("no weight for arrow '" + l + "'");
    total += it->second;
  }
  return total;
}

HomogeneityReport check_homogeneous(const Potential& w, const Grading& g) {
  if (g.degree <= 0) throw std::invalid_argument("graded potentials need strictly positive degree");
  HomogeneityReport r;
  for (const auto& [u, c] : w.terms()) {
    const long long d = word_weight(u, g);
    if (d != g.degree) r.offending.emplace_back(u, d);
  }
  r.homogeneous = r.offending.empty();
  r.degree = g.degree;
  if (r.homogeneous && g.degree == 1) {
    r.is_cut = std::all_of(g.weights.begin(), g.weights.end(),
                           [](const auto& kv) { return kv.second == 0 || kv.second == 1; });
  }
  return r;
}

Potential truncate(const Potential& w, int n) {
  if (n < 0) throw std::invalid_argument("truncate: negative order");
  Potential out = w;
  out.set_valid_to(std::min(w.valid_to(), n));
  return out;
}

std::vector<Word> enumerate_cycles(const Quiver& q, int max_len) {
  std::set<Word> found;
  const int n = q.vertex_count();
  std::vector<std::vector<const Arrow*>> out(n + 1);
  for (const auto& a : q.arrows()) out[a.source].push_back(&a);
  std::vector<const Arrow*> trail;
  // Closed walks starting at the smallest-labelled arrow of their class are
  // enough, but filtering by canonical form after the fact is simpler.
  std::function<void(Vertex, Vertex)> walk = [&](Vertex start, Vertex at) {
    for (const Arrow* a : out[at]) {
      trail.push_back(a);
      if (a->target == start && trail.size() >= 2) {
        Word w;
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) w.push_back((*it)->label);
        found.insert(canonical_rotation(w));
      }
      if (static_cast<int>(trail.size()) < max_len) walk(start, a->target);
      trail.pop_back();
    }
  };
  for (Vertex v = 1; v <= n; ++v) walk(v, v);
  std::vector<Word> result(found.begin(), found.end());
  std::stable_sort(result.begin(), result.end(),
                   [](const Word& x, const Word& y) { return x.size() < y.size(); });
  return result;
}

std::vector<Word> enumerate_paths(const Quiver& q, Vertex from, Vertex to, int len) {
  std::vector<Word> result;
  if (len <= 0) return result;
  std::vector<std::vector<const Arrow*>> out(q.vertex_count() + 1);
  for (const auto& a : q.arrows()) out[a.source].push_back(&a);
  std::vector<const Arrow*> trail;
  std::function<void(Vertex)> walk = [&](Vertex at) {
    if (static_cast<int>(trail.size()) == len) {
      if (at == to) {
        Word w;
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) w.push_back((*it)->label);
        result.push_back(std::move(w));
      }
      return;
    }
    for (const Arrow* a : out[at]) {
      trail.push_back(a);
      walk(a->target);
      trail.pop_back();
    }
  };
  walk(from);
  std::sort(result.begin(), result.end());
  return result;
}

namespace {
Rational sample_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, kRandomCoefficientBound);
  std::uniform_int_distribution<int> den(1, kRandomCoefficientBound);
  std::uniform_int_distribution<int> sign(0, 1);
  Rational r(num(rng) * (sign(rng) ? 1 : -1), den(rng));
  r.canonicalize();
  return r;
}
}  // namespace

Potential random_combination(const std::vector<Word>& cycles, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Potential w;
  for (const auto& c : cycles) w.add_cycle(c, sample_coefficient(rng));
  return w;
}

Potential random_potential(const Quiver& q, int max_len, std::uint64_t seed) {
  if (max_len < 2) throw std::invalid_argument("random_potential: max_len must be at least 2");
  return random_combination(enumerate_cycles(q, max_len), seed);
}

Potential restrict_potential(const Potential& w, const Quiver& q) {
  Potential out(w.valid_to());
  for (const auto& [u, c] : w.terms()) {
    const bool inside = std::all_of(u.begin(), u.end(), [&](const Label& l) { return q.has_arrow(l); });
    if (inside) out.add_cycle(u, c);
  }
  return out;
}

}  // namespace qpc
