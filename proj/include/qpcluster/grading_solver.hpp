#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qpcluster/qp_mutation.hpp"

namespace qpc {

enum class GradingMode { DegreeOnly, PositiveEdges };

struct GradingProblem {
  Quiver quiver;
  std::vector<Word> cycles;  // every cycle must get weight d
  GradingMode mode = GradingMode::DegreeOnly;
};

struct FeasibilityResult {
  bool feasible = false;
  std::map<Label, long long> weights;
  long long degree = 0;
  /// Infeasible: integer multipliers, one per constraint cycle.
  /// DegreeOnly: sum_c y_c (weight of c) vanishes identically in the arrow
  /// weights while sum_c y_c != 0, i.e. c d = c' d with c = lhs, c' = rhs.
  /// PositiveEdges: sum_c y_c mult(a, c) >= 0 for every arrow, sum_c y_c <= 0
  /// and sum_c y_c len(c) > 0, which rules out weights >= 1.
  std::vector<Integer> witness;
  Integer lhs = 0;
  Integer rhs = 0;
};

/// Exact feasibility of the homogeneity constraints. Solutions are the
/// smallest integer multiples of the rational solution found.
FeasibilityResult find_grading(const GradingProblem& p);

/// Every constraint cycle has weight d >= 1 (and every weight >= 1 in
/// PositiveEdges mode).
bool verify_grading(const GradingProblem& p, const std::map<Label, long long>& weights, long long degree);

/// Re-evaluates an infeasibility witness against the constraint rows.
bool verify_witness(const GradingProblem& p, const FeasibilityResult& r);

/// Number of times each arrow occurs in a cycle.
std::map<Label, long long> arrow_multiplicities(const Word& cycle);

/// Generic rational combination of the simple cycles of q.
Potential simple_cycle_potential(const Quiver& q, std::uint64_t seed);

/// Copy of q with arrow weights replaced.
Quiver with_weights(const Quiver& q, const std::map<Label, long long>& weights);

struct GradedSearchReport {
  bool success = false;
  std::string failed_stage;  // "grading" or "nondegeneracy"
  GradingMode mode = GradingMode::PositiveEdges;
  FeasibilityResult grading;
  QP qp;
  std::size_t sequences_checked = 0;
  bool exhaustive = true;  // false when the sequence cap was hit
  std::vector<Vertex> failing_sequence;
  std::vector<std::pair<Vertex, Vertex>> witness;
};

/// Grading over the simple cycles (positive edges, falling back to degree
/// only), a random graded potential on the homogeneous cycles of degree d up
/// to the working length, then nondegeneracy along every sequence without
/// immediate repeats of length <= depth (at most max_sequences of them).
GradedSearchReport graded_nondegenerate_search(const Quiver& q, int depth, std::uint64_t seed,
                                               std::size_t max_sequences = 20000);

}  // namespace qpc
