#include "qpcluster/grading_solver.hpp"

#include <algorithm>
#include <functional>

#include "qpcluster/exact_lp.hpp"

namespace qpc {

std::map<Label, long long> arrow_multiplicities(const Word& cycle) {
  std::map<Label, long long> m;
  for (const auto& l : cycle) ++m[l];
  return m;
}

namespace {

std::vector<Integer> oriented(std::vector<Integer> v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

long long to_ll(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("grading weight does not fit in a machine integer");
  return z.get_si();
}

}  // namespace

FeasibilityResult find_grading(const GradingProblem& p) {
  if (p.cycles.empty()) throw std::invalid_argument("find_grading: empty cycle set");
  for (const auto& c : p.cycles)
    if (!is_cycle(p.quiver, c)) throw std::invalid_argument("find_grading: '" + format_word(c) + "' is not a cycle");
  const auto& arrows = p.quiver.arrows();
  const int na = static_cast<int>(arrows.size());
  const int rows = static_cast<int>(p.cycles.size());
  std::map<Label, int> col;
  for (int j = 0; j < na; ++j) col[arrows[j].label] = j;
  FeasibilityResult res;

  if (p.mode == GradingMode::DegreeOnly) {
    RationalMatrix a(rows, RationalVector(na, 0));
    RationalVector b(rows, 1);
    for (int i = 0; i < rows; ++i)
      for (const auto& [l, m] : arrow_multiplicities(p.cycles[i])) a[i][col.at(l)] = static_cast<long>(m);
    const auto sol = solve_linear_system(a, b, na);
    if (!sol.consistent) {
      res.witness = oriented(primitive_integer_vector(sol.certificate));
      for (const auto& y : res.witness) (y > 0 ? res.lhs : res.rhs) += abs(y);
      return res;
    }
    RationalVector v = sol.solution;
    v.push_back(1);
    const auto ints = primitive_integer_vector(v);
    res.feasible = true;
    for (int j = 0; j < na; ++j) res.weights[arrows[j].label] = to_ll(ints[j]);
    res.degree = to_ll(ints[na]);
    return res;
  }

  // Positive edges: w = 1 + u, u >= 0, d >= 0, rows -sum u + d = len(c).
  RationalMatrix a(rows, RationalVector(na + 1, 0));
  RationalVector b(rows, 0);
  for (int i = 0; i < rows; ++i) {
    for (const auto& [l, m] : arrow_multiplicities(p.cycles[i])) a[i][col.at(l)] = -static_cast<long>(m);
    a[i][na] = 1;
    b[i] = static_cast<long>(p.cycles[i].size());
  }
  const auto lp = find_nonnegative_solution(a, b, na + 1);
  if (!lp.feasible) {
    // farkas: y^T A >= 0, y^T b < 0. Report z = -y.
    RationalVector z(lp.farkas.size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = -lp.farkas[i];
    res.witness = primitive_integer_vector(z);
    for (const auto& y : res.witness) (y > 0 ? res.lhs : res.rhs) += abs(y);
    return res;
  }
  RationalVector v(na + 1);
  for (int j = 0; j < na; ++j) v[j] = 1 + lp.x[j];
  v[na] = lp.x[na];
  const auto ints = primitive_integer_vector(v);
  res.feasible = true;
  for (int j = 0; j < na; ++j) res.weights[arrows[j].label] = to_ll(ints[j]);
  res.degree = to_ll(ints[na]);
  return res;
}

bool verify_grading(const GradingProblem& p, const std::map<Label, long long>& weights, long long degree) {
  if (degree < 1) return false;
  if (p.mode == GradingMode::PositiveEdges)
    for (const auto& a : p.quiver.arrows()) {
      auto it = weights.find(a.label);
      if (it == weights.end() || it->second < 1) return false;
    }
  for (const auto& c : p.cycles) {
    long long total = 0;
    for (const auto& l : c) {
      auto it = weights.find(l);
      if (it == weights.end()) return false;
      total += it->second;
    }
    if (total != degree) return false;
  }
  return true;
}

bool verify_witness(const GradingProblem& p, const FeasibilityResult& r) {
  if (r.feasible || r.witness.size() != p.cycles.size()) return false;
  std::map<Label, Integer> per_arrow;
  Integer total = 0, weighted_len = 0;
  for (std::size_t i = 0; i < p.cycles.size(); ++i) {
    for (const auto& [l, m] : arrow_multiplicities(p.cycles[i])) per_arrow[l] += r.witness[i] * static_cast<long>(m);
    total += r.witness[i];
    weighted_len += r.witness[i] * static_cast<long>(p.cycles[i].size());
  }
  if (p.mode == GradingMode::DegreeOnly) {
    for (const auto& [l, v] : per_arrow)
      if (v != 0) return false;
    Integer lhs = 0, rhs = 0;
    for (const auto& y : r.witness) (y > 0 ? lhs : rhs) += abs(y);
    return total != 0 && lhs == r.lhs && rhs == r.rhs && lhs != rhs;
  }
  for (const auto& [l, v] : per_arrow)
    if (v < 0) return false;
  return total <= 0 && weighted_len > 0;
}

Potential simple_cycle_potential(const Quiver& q, std::uint64_t seed) {
  return random_combination(enumerate_simple_cycles(q, q.vertex_count()), seed);
}

Quiver with_weights(const Quiver& q, const std::map<Label, long long>& weights) {
  std::vector<Arrow> arrows = q.arrows();
  for (auto& a : arrows) {
    auto it = weights.find(a.label);
    if (it != weights.end()) a.weight = static_cast<int>(it->second);
  }
  return Quiver(q.vertex_count(), q.principal_count(), std::move(arrows));
}

GradedSearchReport graded_nondegenerate_search(const Quiver& q, int depth, std::uint64_t seed,
                                               std::size_t max_sequences) {
  if (depth < 1) throw std::invalid_argument("graded_nondegenerate_search: depth must be >= 1");
  GradedSearchReport rep;
  const int work = required_order(depth, 2);
  const auto simple = enumerate_simple_cycles(q, q.vertex_count());
  if (simple.empty()) {
    rep.grading.feasible = true;
    rep.grading.degree = 1;
    for (const auto& a : q.arrows()) rep.grading.weights[a.label] = 0;
    rep.qp = QP{with_weights(q, rep.grading.weights), Potential(), std::nullopt};
  } else {
    rep.grading = find_grading({q, simple, GradingMode::PositiveEdges});
    if (!rep.grading.feasible) {
      rep.mode = GradingMode::DegreeOnly;
      rep.grading = find_grading({q, simple, GradingMode::DegreeOnly});
    }
    if (!rep.grading.feasible) {
      rep.failed_stage = "grading";
      return rep;
    }
    Quiver graded = with_weights(q, rep.grading.weights);
    const Grading g = grading_of(graded, rep.grading.degree);
    std::vector<Word> homogeneous;
    for (auto& c : enumerate_cycles(q, work))
      if (word_weight(c, g) == rep.grading.degree) homogeneous.push_back(std::move(c));
    rep.qp = QP{graded, random_combination(homogeneous, seed), rep.grading.degree};
  }

  std::vector<Vertex> seq;
  bool failed = false;
  std::function<void(const QP&, int)> dfs = [&](const QP& cur, int level) {
    for (Vertex s = 1; s <= q.principal_count() && !failed; ++s) {
      if (!seq.empty() && seq.back() == s) continue;
      if (rep.sequences_checked >= max_sequences) {
        rep.exhaustive = false;
        return;
      }
      seq.push_back(s);
      MutationStep step = mutate_qp_step(cur, s, required_order(depth - level - 1, 2));
      ++rep.sequences_checked;
      if (step.degenerate()) {
        failed = true;
        rep.failing_sequence = seq;
        rep.witness = step.remaining_two_cycles;
        return;
      }
      if (level + 1 < depth) dfs(step.result(), level + 1);
      seq.pop_back();
    }
  };
  dfs(rep.qp, 0);
  if (failed) {
    rep.failed_stage = "nondegeneracy";
    return rep;
  }
  rep.success = true;
  return rep;
}

}  // namespace qpc
