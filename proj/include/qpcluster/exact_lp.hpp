#pragma once

#include <vector>

#include "qpcluster/rational.hpp"

namespace qpc {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

/// Solution of A x = b, or a certificate y with y^T A = 0 and y^T b != 0.
struct LinearSolveResult {
  bool consistent = false;
  RationalVector solution;     // free variables set to zero
  RationalVector certificate;  // one entry per row of A
  int rank = 0;
};

/// Exact Gaussian elimination over Q. Rows of A all have `cols` entries.
LinearSolveResult solve_linear_system(const RationalMatrix& a, const RationalVector& b, int cols);

/// x >= 0 with A x = b, or a Farkas certificate y with y^T A >= 0 and y^T b < 0.
struct FeasibilityLPResult {
  bool feasible = false;
  RationalVector x;
  RationalVector farkas;
};

/// Two-phase exact simplex (phase one only) with Bland's rule.
FeasibilityLPResult find_nonnegative_solution(const RationalMatrix& a, const RationalVector& b, int cols);

/// Scales a rational vector to the primitive integer vector on the same ray.
std::vector<Integer> primitive_integer_vector(const RationalVector& v);

}  // namespace qpc
