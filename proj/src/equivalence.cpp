#include "qpcluster/equivalence.hpp"

#include <algorithm>
#include <set>

#include "qpcluster/exact_lp.hpp"

namespace qpc {

namespace {

constexpr std::size_t kMaxMatchings = 720;

Potential rename(const Potential& w, const std::map<Label, Label>& m) {
  Potential out(w.valid_to());
  for (const auto& [u, c] : w.terms()) {
    Word v;
    v.reserve(u.size());
    for (const auto& l : u) v.push_back(m.at(l));
    out.add_cycle(v, c);
  }
  return out;
}

// Signed integer root: x^(1/k) in Q if it exists.
bool signed_root(const Rational& x, unsigned k, Rational& out) {
  if (x >= 0) return rational_root(x, k, out);
  if (k % 2 == 0) return false;
  if (!rational_root(-x, k, out)) return false;
  out = -out;
  return true;
}

Rational power(const Rational& base, const Integer& e) {
  Integer ae = abs(e);
  Rational r = 1;
  for (Integer i = 0; i < ae; ++i) r *= base;
  return e < 0 ? 1 / r : r;
}

// Diagonal rescaling of arrows carrying the lowest-length part of `from` onto
// that of `to`. Both parts must have the same support.
bool solve_scaling(const Potential& to, const Potential& from, std::size_t len, Substitution& out) {
  std::vector<Word> cycles;
  std::vector<Rational> ratios;
  for (const auto& [u, c] : from.terms()) {
    if (u.size() != len) continue;
    const Rational target = to.coefficient(u);
    if (target == 0) return false;
    cycles.push_back(u);
    ratios.push_back(target / c);
  }
  for (const auto& [u, c] : to.terms())
    if (u.size() == len && from.coefficient(u) == 0) return false;
  std::vector<Label> arrows;
  for (const auto& u : cycles)
    for (const auto& l : u)
      if (std::find(arrows.begin(), arrows.end(), l) == arrows.end()) arrows.push_back(l);
  const int rows = static_cast<int>(cycles.size());
  const int cols = static_cast<int>(arrows.size());
  // [A | T]: T records the row operations, so x_pivot = sum_u T[u] log r_u.
  RationalMatrix m(rows, RationalVector(cols + rows, 0));
  for (int i = 0; i < rows; ++i) {
    for (const auto& l : cycles[i]) m[i][std::find(arrows.begin(), arrows.end(), l) - arrows.begin()] += 1;
    m[i][cols + i] = 1;
  }
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (int j = 0; j < cols + rows; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  auto evaluate = [&](const RationalVector& row, Rational& value) {
    RationalVector exps(row.begin() + cols, row.end());
    Integer den = common_denominator(exps);
    Rational x = 1;
    for (int u = 0; u < rows; ++u) {
      Rational e = exps[u] * den;
      x *= power(ratios[u], e.get_num());
    }
    return signed_root(x, static_cast<unsigned>(den.get_ui()), value);
  };
  for (int i = r; i < rows; ++i) {
    Rational v;
    if (!evaluate(m[i], v) || v != 1) return false;
  }
  out = Substitution();
  for (int i = 0; i < r; ++i) {
    Rational v;
    if (!evaluate(m[i], v)) return false;
    out.set(arrows[pivots[i]], NCPoly::monomial({arrows[pivots[i]]}, v));
  }
  return true;
}

// Degree-by-degree unitriangular correction of `w` towards `target`.
bool solve_unitriangular(const Quiver& q, const Potential& target, Potential& w, int order, Substitution& witness) {
  const std::size_t low = w.min_length();
  const Potential base = w.homogeneous_part(low);
  for (std::size_t d = low + 1; d <= static_cast<std::size_t>(order); ++d) {
    Potential diff = target.homogeneous_part(d);
    diff -= w.homogeneous_part(d);
    if (diff.is_zero()) continue;
    const int k = static_cast<int>(d - low + 1);
    struct Unknown {
      Label arrow;
      Word path;
    };
    std::vector<Unknown> unknowns;
    for (const auto& a : q.arrows())
      for (auto& p : enumerate_paths(q, a.source, a.target, k)) unknowns.push_back({a.label, std::move(p)});
    std::map<Word, int> row_of;
    auto row = [&](const Word& u) {
      auto [it, inserted] = row_of.try_emplace(canonical_rotation(u), static_cast<int>(row_of.size()));
      return it->second;
    };
    for (const auto& [u, c] : diff.terms()) row(u);
    std::vector<std::map<int, Rational>> columns(unknowns.size());
    for (std::size_t j = 0; j < unknowns.size(); ++j)
      for (const auto& [u, c] : base.terms())
        for (std::size_t i = 0; i < u.size(); ++i) {
          if (u[i] != unknowns[j].arrow) continue;
          Word v(u.begin(), u.begin() + static_cast<long>(i));
          v.insert(v.end(), unknowns[j].path.begin(), unknowns[j].path.end());
          v.insert(v.end(), u.begin() + static_cast<long>(i) + 1, u.end());
          columns[j][row(v)] += c;
        }
    const int rows = static_cast<int>(row_of.size());
    RationalMatrix a(rows, RationalVector(unknowns.size(), 0));
    RationalVector b(rows, 0);
    for (std::size_t j = 0; j < unknowns.size(); ++j)
      for (const auto& [i, c] : columns[j]) a[i][j] = c;
    for (const auto& [u, c] : diff.terms()) b[row_of.at(u)] = c;
    const auto sol = solve_linear_system(a, b, static_cast<int>(unknowns.size()));
    if (!sol.consistent) return false;
    std::map<Label, NCPoly> corr;
    for (std::size_t j = 0; j < unknowns.size(); ++j)
      if (sol.solution[j] != 0) corr[unknowns[j].arrow].add(unknowns[j].path, sol.solution[j]);
    Substitution sigma;
    for (auto& [x, h] : corr) sigma.set(x, NCPoly::monomial({x}) + h);
    w = sigma.apply(w, order);
    witness = witness.then(sigma, static_cast<std::size_t>(order));
    Potential check = target.homogeneous_part(d);
    check -= w.homogeneous_part(d);
    if (!check.is_zero()) return false;
  }
  return true;
}

bool try_matching(const QP& a, const Potential& wa, const Potential& wb, int order, Substitution& witness) {
  if (wa.is_zero() || wb.is_zero()) {
    witness = Substitution();
    return wa.is_zero() && wb.is_zero();
  }
  const std::size_t low = std::min(wa.min_length(), wb.min_length());
  Substitution scale;
  if (!solve_scaling(wa, wb, low, scale)) return false;
  Potential w = scale.apply(wb, order);
  witness = scale;
  if (!solve_unitriangular(a.quiver, wa, w, order, witness)) return false;
  Potential diff = wa;
  diff -= w;
  return diff.is_zero();
}

}  // namespace

std::string to_string(EquivalenceVerdict v) {
  switch (v) {
    case EquivalenceVerdict::Identical: return "identical";
    case EquivalenceVerdict::Equivalent: return "equivalent";
    case EquivalenceVerdict::NotEstablished: return "not-established";
    case EquivalenceVerdict::QuiversDiffer: return "quivers-differ";
  }
  return "?";
}

EquivalenceResult compare_qps(const QP& a, const QP& b, int order) {
  EquivalenceResult res;
  res.order = std::min({order, a.potential.valid_to(), b.potential.valid_to()});
  if (!same_up_to_relabeling(a.quiver, b.quiver)) {
    res.verdict = EquivalenceVerdict::QuiversDiffer;
    res.detail = "arrow multisets differ";
    return res;
  }
  const Potential wa = truncate(a.potential, res.order);
  const Potential wb = truncate(b.potential, res.order);

  // Parallel classes, in matching order.
  std::map<std::pair<Vertex, Vertex>, std::pair<std::vector<Label>, std::vector<Label>>> classes;
  for (const auto& x : a.quiver.arrows()) classes[{x.source, x.target}].first.push_back(x.label);
  for (const auto& x : b.quiver.arrows()) classes[{x.source, x.target}].second.push_back(x.label);
  std::vector<std::pair<std::vector<Label>, std::vector<Label>>> groups;
  for (auto& [key, g] : classes) {
    std::sort(g.first.begin(), g.first.end());
    std::sort(g.second.begin(), g.second.end());
    // Arrows sharing a label go first so the label-preserving matching is tried first.
    std::stable_partition(g.second.begin(), g.second.end(), [&](const Label& l) {
      return std::binary_search(g.first.begin(), g.first.end(), l);
    });
    std::stable_partition(g.first.begin(), g.first.end(), [&](const Label& l) {
      return std::find(g.second.begin(), g.second.end(), l) != g.second.end();
    });
    groups.push_back(g);
  }

  bool same_labels = true;
  for (const auto& g : groups)
    for (std::size_t i = 0; i < g.first.size(); ++i) same_labels &= g.first[i] == g.second[i];
  if (same_labels && wa.terms() == wb.terms()) {
    res.verdict = EquivalenceVerdict::Identical;
    for (const auto& x : b.quiver.arrows()) res.matching[x.label] = x.label;
    return res;
  }

  std::vector<std::vector<std::size_t>> perm;
  for (const auto& g : groups) {
    std::vector<std::size_t> idx(g.second.size());
    for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
    perm.push_back(std::move(idx));
  }
  std::size_t tried = 0;
  while (tried < kMaxMatchings) {
    ++tried;
    std::map<Label, Label> m;
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = 0; j < perm[i].size(); ++j) m[groups[i].second[perm[i][j]]] = groups[i].first[j];
    Substitution witness;
    if (try_matching(a, wa, rename(wb, m), res.order, witness)) {
      res.verdict = EquivalenceVerdict::Equivalent;
      res.matching = std::move(m);
      res.witness = std::move(witness);
      return res;
    }
    // Next matching: odometer over per-class permutations.
    std::size_t i = 0;
    for (; i < perm.size(); ++i)
      if (std::next_permutation(perm[i].begin(), perm[i].end())) break;
    if (i == perm.size()) break;
  }
  res.verdict = EquivalenceVerdict::NotEstablished;
  res.detail = "no rescaling plus unitriangular substitution found over " + std::to_string(tried) + " matchings";
  return res;
}

bool equivalent_up_to_normal_form(const QP& a, const QP& b, int order) {
  const auto v = compare_qps(a, b, order).verdict;
  return v == EquivalenceVerdict::Identical || v == EquivalenceVerdict::Equivalent;
}

}  // namespace qpc
