#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpcluster/rational.hpp"

namespace qpc {

/// Laurent polynomial in v = q^{1/2} with integer coefficients, keyed by the
/// exponent of v.
class QCoeff {
 public:
  using Terms = std::map<long long, Integer>;

  QCoeff() = default;
  QCoeff(Integer c) { add(0, c); }  // NOLINT: constants convert implicitly
  static QCoeff v_power(long long e, Integer c = 1);

  void add(long long e, const Integer& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(long long e) const;
  long long min_exponent() const { return terms_.begin()->first; }
  long long max_exponent() const { return terms_.rbegin()->first; }

  /// Multiplies by v^k.
  QCoeff shifted(long long k) const;
  /// v -> v^{-1}.
  QCoeff bar() const;
  /// Value at v = 1.
  Integer at_one() const;
  /// Exact quotient in Z[v, v^{-1}], if it exists.
  std::optional<QCoeff> divide_exact(const QCoeff& d) const;

  QCoeff& operator+=(const QCoeff& o);
  QCoeff& operator-=(const QCoeff& o);
  friend QCoeff operator+(QCoeff a, const QCoeff& b) { return a += b; }
  friend QCoeff operator-(QCoeff a, const QCoeff& b) { return a -= b; }
  friend QCoeff operator*(const QCoeff& a, const QCoeff& b);
  friend bool operator==(const QCoeff&, const QCoeff&) = default;

  /// E.g. "v^-1 + 2 v^3"; zero renders as "0".
  std::string to_string() const;

 private:
  Terms terms_;
};

using LatticeVector = std::vector<long long>;
using SkewForm = IntMatrix;

/// Lambda(e, f) = e^T Lambda f.
long long skew_pairing(const SkewForm& lambda, const LatticeVector& e, const LatticeVector& f);

/// Total order on Z^n: total degree first, then lexicographic. Compatible with
/// addition, so leading terms multiply.
struct GradedLex {
  bool operator()(const LatticeVector& a, const LatticeVector& b) const;
};

/// Element of the quantum torus: finite sum of c_e(v) X^e.
class TorusElement {
 public:
  using Terms = std::map<LatticeVector, QCoeff, GradedLex>;

  TorusElement() = default;
  explicit TorusElement(int rank) : rank_(rank) {}
  static TorusElement monomial(const LatticeVector& e, QCoeff c = QCoeff(1));
  static TorusElement one(int rank);

  int rank() const { return rank_; }
  void add(const LatticeVector& e, const QCoeff& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QCoeff coefficient(const LatticeVector& e) const;
  std::size_t size() const { return terms_.size(); }

  /// Multiplies every coefficient by v^k.
  TorusElement shifted(long long k) const;
  /// Specialisation v = 1: a commutative Laurent polynomial.
  std::map<LatticeVector, Integer> at_one() const;

  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend bool operator==(const TorusElement&, const TorusElement&) = default;

  std::string to_string() const;

 private:
  int rank_ = 0;
  Terms terms_;
};

/// Twisted product X^e X^f = v^{Lambda(e,f)} X^{e+f}. Parallel over the
/// terms of x with OpenMP.
TorusElement torus_mul(const TorusElement& x, const TorusElement& y, const SkewForm& lambda);
/// Single-threaded reference for torus_mul.
TorusElement torus_mul_serial(const TorusElement& x, const TorusElement& y, const SkewForm& lambda);

/// q with torus_mul(q, d) = x. Throws std::domain_error("not exactly divisible").
TorusElement exact_divide(const TorusElement& x, const TorusElement& d, const SkewForm& lambda);

std::string format_lattice(const LatticeVector& e);

}  // namespace qpc
