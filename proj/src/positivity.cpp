#include "qpcluster/positivity.hpp"

#include <stdexcept>

namespace qpc {

QCoeff lefschetz_polynomial(long long n, long long k) {
  if (k < 0) throw std::invalid_argument("lefschetz_polynomial: k must be nonnegative");
  QCoeff p;
  for (long long e = -k; e <= k; e += 2) p.add(n + e, 1);
  return p;
}

LefschetzResult lefschetz_decompose(const QCoeff& a) {
  if (a.is_zero()) throw std::invalid_argument("lefschetz_decompose: zero coefficient");
  LefschetzResult r;
  for (const auto& [e, c] : a.terms())
    if (c < 0) {
      r.failure = "negative";
      return r;
    }
  const long long lo = a.min_exponent();
  const long long hi = a.max_exponent();
  if ((lo + hi) % 2 != 0 || !uniform_parity(a)) {
    r.failure = "parity-mix";
    return r;
  }
  const long long n = (lo + hi) / 2;
  for (long long j = 0; n + j <= hi; ++j)
    if (a.coefficient(n + j) != a.coefficient(n - j)) {
      r.failure = "asymmetric";
      return r;
    }
  const long long top = hi - n;
  r.decomposition.center = n;
  for (long long k = top; k >= 0; k -= 2) {
    const Integer m = a.coefficient(n + k) - a.coefficient(n + k + 2);
    if (m < 0) {
      r.failure = "non-unimodal";
      r.decomposition.parts.clear();
      return r;
    }
    if (m > 0) r.decomposition.parts[k] = m;
  }
  r.ok = true;
  return r;
}

QCoeff recompose(const LefschetzDecomposition& d) {
  QCoeff out;
  for (const auto& [k, m] : d.parts) {
    const QCoeff p = lefschetz_polynomial(d.center, k);
    for (const auto& [e, c] : p.terms()) out.add(e, c * m);
  }
  return out;
}

bool uniform_parity(const QCoeff& a) {
  if (a.is_zero()) return true;
  const long long p = a.min_exponent() & 1;
  for (const auto& [e, c] : a.terms())
    if ((e & 1) != p) return false;
  return true;
}

PositivityReport positivity_report(const QuantumSeed& seed, const LatticeVector& n, ExpansionBasis basis) {
  PositivityReport rep;
  rep.monomial = n;
  for (const auto& [k, a] : expand_monomial(seed, n, basis)) {
    CoefficientReport c;
    c.k = k;
    c.coefficient = a;
    c.positive = true;
    for (const auto& [e, x] : a.terms()) c.positive &= x > 0;
    c.uniform_parity = uniform_parity(a);
    c.lefschetz = lefschetz_decompose(a);
    rep.all_positive &= c.positive;
    rep.all_uniform_parity &= c.uniform_parity;
    rep.all_lefschetz &= c.lefschetz.ok;
    rep.coefficients.push_back(std::move(c));
  }
  return rep;
}

std::string format_parts(const LefschetzDecomposition& d) {
  std::string out;
  for (const auto& [k, m] : d.parts) {
    if (!out.empty()) out += ',';
    out += std::to_string(k) + ':' + m.get_str();
  }
  return out;
}

}  // namespace qpc
