#include "qpcluster/exact_lp.hpp"

#include <stdexcept>

namespace qpc {

LinearSolveResult solve_linear_system(const RationalMatrix& a, const RationalVector& b, int cols) {
  const int rows = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != rows) throw std::invalid_argument("solve_linear_system: size mismatch");
  // Augmented matrix [A | b | I] so the row operations are recorded.
  const int width = cols + 1 + rows;
  RationalMatrix m(rows, RationalVector(width, 0));
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(a[i].size()) != cols) throw std::invalid_argument("solve_linear_system: ragged matrix");
    for (int j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
    m[i][cols + 1 + i] = 1;
  }
  std::vector<int> pivot_col;
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
    for (int j = 0; j < width; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (int j = 0; j < width; ++j)
        if (m[r][j] != 0) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  LinearSolveResult out;
  out.rank = r;
  for (int i = r; i < rows; ++i) {
    if (m[i][cols] != 0) {
      out.consistent = false;
      out.certificate.assign(m[i].begin() + cols + 1, m[i].end());
      return out;
    }
  }
  out.consistent = true;
  out.solution.assign(cols, 0);
  for (int i = 0; i < r; ++i) out.solution[pivot_col[i]] = m[i][cols];
  return out;
}

FeasibilityLPResult find_nonnegative_solution(const RationalMatrix& a, const RationalVector& b, int cols) {
  const int rows = static_cast<int>(a.size());
  // Tableau over columns: x (cols), artificials (rows), rhs.
  const int width = cols + rows + 1;
  const int rhs = width - 1;
  RationalMatrix t(rows, RationalVector(width, 0));
  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) {
    const Rational sign = b[i] < 0 ? -1 : 1;
    for (int j = 0; j < cols; ++j) t[i][j] = sign * a[i][j];
    t[i][cols + i] = 1;
    t[i][rhs] = sign * b[i];
    basis[i] = cols + i;
  }
  // Phase-one objective: minimise the sum of artificials. Reduced costs row.
  RationalVector cost(width, 0);
  for (int j = 0; j < width; ++j) {
    if (j >= cols && j < cols + rows) continue;
    for (int i = 0; i < rows; ++i) cost[j] -= t[i][j];
  }
  while (true) {
    int enter = -1;
    for (int j = 0; j < cols + rows; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = t[i][rhs] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw std::logic_error("phase-one simplex cannot be unbounded");
    const Rational inv = 1 / t[leave][enter];
    for (int j = 0; j < width; ++j) t[leave][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (int j = 0; j < width; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    const Rational f = cost[enter];
    for (int j = 0; j < width; ++j)
      if (t[leave][j] != 0) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  FeasibilityLPResult out;
  // Optimal phase-one value is -cost[rhs].
  if (cost[rhs] == 0) {
    out.feasible = true;
    out.x.assign(cols, 0);
    for (int i = 0; i < rows; ++i)
      if (basis[i] < cols) out.x[basis[i]] = t[i][rhs];
    return out;
  }
  // Dual values of the (sign-normalised) rows: y_i = 1 + cost of artificial i
  // relative to the phase-one objective; flip to certify y^T A >= 0, y^T b < 0.
  out.feasible = false;
  out.farkas.assign(rows, 0);
  for (int i = 0; i < rows; ++i) {
    const Rational sign = b[i] < 0 ? -1 : 1;
    const Rational dual = 1 - cost[cols + i];
    out.farkas[i] = -sign * dual;
  }
  return out;
}

std::vector<Integer> primitive_integer_vector(const RationalVector& v) {
  Integer den = common_denominator(v);
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Rational s = x * den;
    Integer z = s.get_num();
    out.push_back(z);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  }
  if (g > 1)
    for (auto& z : out) z /= g;
  return out;
}

}  // namespace qpc
