#include "qpcluster/quantum_seed.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qpc {

namespace {

LatticeVector unit(int n, int i) {
  LatticeVector e(n, 0);
  e[i] = 1;
  return e;
}

long long ordered_twist(const SkewForm& lambda, const LatticeVector& c) {
  long long s = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) s += c[i] * c[j] * lambda(static_cast<int>(i), static_cast<int>(j));
  return s;
}

// Product Z_1^{c_1} ... Z_n^{c_n} for c >= 0, twisted into M(c).
TorusElement nonnegative_frame(const QuantumSeed& seed, const LatticeVector& c) {
  const int n = seed.rank();
  TorusElement acc = TorusElement::one(n);
  for (int i = 0; i < n; ++i)
    for (long long k = 0; k < c[i]; ++k) acc = torus_mul(acc, seed.z[i], seed.root_lambda);
  return acc.shifted(-ordered_twist(seed.lambda, c));
}

}  // namespace

bool check_compatible(const ExchangeMatrix& b, const SkewForm& lambda) {
  const int n = b.rows();
  const int m = b.cols();
  if (lambda.rows() != n || lambda.cols() != n || !lambda.is_skew_symmetric()) return false;
  const IntMatrix p = b.transpose() * lambda;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (p(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Quantization quantize(const Quiver& q) {
  if (!q.is_two_cycle_free()) throw std::invalid_argument("quantize: quiver has a 2-cycle");
  const int n = q.vertex_count();
  const int m = q.principal_count();
  std::vector<Arrow> arrows = q.arrows();
  for (Vertex v = 1; v <= m; ++v) {
    Label label = "q" + std::to_string(v);
    while (q.has_arrow(label)) label += "'";
    arrows.push_back({label, v, n + v, 0});
  }
  Quantization out{Quiver(n + m, m, std::move(arrows)), SkewForm(n + m, n + m)};
  const ExchangeMatrix b = exchange_matrix(q);
  for (int i = 0; i < m; ++i) {
    out.lambda(i, n + i) = -1;
    out.lambda(n + i, i) = 1;
    for (int j = 0; j < m; ++j) out.lambda(n + i, n + j) = b(j, i);
  }
  return out;
}

QuantumSeed initial_seed(const ExchangeMatrix& b, const SkewForm& lambda) {
  if (!check_compatible(b, lambda)) throw std::invalid_argument("exchange matrix and commutation matrix are not compatible");
  QuantumSeed s{b, lambda, {}, lambda, {}};
  const int n = lambda.rows();
  for (int i = 0; i < n; ++i) s.z.push_back(TorusElement::monomial(unit(n, i)));
  return s;
}

TorusElement frame_monomial(const QuantumSeed& seed, const LatticeVector& c) {
  const int n = seed.rank();
  if (static_cast<int>(c.size()) != n) throw std::invalid_argument("frame_monomial: rank mismatch");
  LatticeVector plus(n), minus(n);
  for (int i = 0; i < n; ++i) {
    plus[i] = std::max(c[i], 0LL);
    minus[i] = std::max(-c[i], 0LL);
  }
  TorusElement top = nonnegative_frame(seed, plus);
  if (std::all_of(minus.begin(), minus.end(), [](long long x) { return x == 0; })) return top;
  // M(c) = v^{Lambda(c+, c-)} M(c+) M(c-)^{-1}
  TorusElement den = nonnegative_frame(seed, minus);
  return exact_divide(top, den, seed.root_lambda).shifted(skew_pairing(seed.lambda, plus, minus));
}

QuantumSeed mutate_seed(const QuantumSeed& seed, Vertex s) {
  const int n = seed.rank();
  const int m = seed.principal_count();
  if (s < 1 || s > m) throw std::invalid_argument("cannot mutate at frozen or missing vertex " + std::to_string(s));
  const int k = s - 1;
  LatticeVector cp(n, 0), cm(n, 0);
  for (int i = 0; i < n; ++i) {
    const long long bis = seed.b(i, k);
    if (bis > 0) cp[i] = bis;
    if (bis < 0) cm[i] = -bis;
  }
  // c+ + e_s and c- + e_s are nonnegative; M(c) = v^{Lambda(c+e_s, e_s)} M(c+e_s) Z_s^{-1}.
  const LatticeVector es = unit(n, k);
  TorusElement num = nonnegative_frame(seed, cp).shifted(skew_pairing(seed.lambda, cp, es));
  num += nonnegative_frame(seed, cm).shifted(skew_pairing(seed.lambda, cm, es));
  QuantumSeed out = seed;
  out.z[k] = exact_divide(num, seed.z[k], seed.root_lambda);
  out.b = mutate_matrix(seed.b, s);
  LatticeVector plus = cp, minus = cm;
  plus[k] -= 1;
  minus[k] -= 1;
  for (int i = 0; i < n; ++i) {
    if (i == k) continue;
    const LatticeVector ei = unit(n, i);
    const long long l = skew_pairing(seed.lambda, ei, plus);
    if (l != skew_pairing(seed.lambda, ei, minus))
      throw std::logic_error("mutate_seed: commutation exponents of the two exchange monomials disagree");
    out.lambda(i, k) = l;
    out.lambda(k, i) = -l;
  }
  if (!check_compatible(out.b, out.lambda)) throw std::logic_error("mutate_seed: mutated seed is not compatible");
  out.history.push_back(s);
  return out;
}

QuantumSeed mutate_seed(const QuantumSeed& seed, const std::vector<Vertex>& seq) {
  QuantumSeed cur = seed;
  for (Vertex s : seq) cur = mutate_seed(cur, s);
  return cur;
}

bool check_quasi_commutation(const QuantumSeed& seed) {
  const int n = seed.rank();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const TorusElement lhs = torus_mul(seed.z[i], seed.z[j], seed.root_lambda);
      const TorusElement rhs = torus_mul(seed.z[j], seed.z[i], seed.root_lambda).shifted(2 * seed.lambda(i, j));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

bool same_seed(const QuantumSeed& a, const QuantumSeed& b) {
  return a.b == b.b && a.lambda == b.lambda && a.z == b.z;
}

std::optional<std::vector<int>> seed_permutation(const QuantumSeed& a, const QuantumSeed& b) {
  const int n = a.rank();
  const int m = a.principal_count();
  if (n != b.rank() || m != b.principal_count()) return std::nullopt;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = a.z[p[i]] == b.z[i];
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < m && ok; ++j) ok = a.b(p[i], p[j]) == b.b(i, j);
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) ok = a.lambda(p[i], p[j]) == b.lambda(i, j);
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.begin() + m));
  return std::nullopt;
}

std::map<LatticeVector, QCoeff, GradedLex> expand_monomial(const QuantumSeed& seed, const LatticeVector& n,
                                                           ExpansionBasis basis) {
  for (int i = 0; i < seed.principal_count(); ++i)
    if (n[i] < 0) throw std::invalid_argument("cluster monomials need nonnegative principal exponents");
  const TorusElement y = frame_monomial(seed, n);
  std::map<LatticeVector, QCoeff, GradedLex> out;
  for (const auto& [k, c] : y.terms())
    out.emplace(k, basis == ExpansionBasis::Ordered ? c.shifted(-ordered_twist(seed.root_lambda, k)) : c);
  return out;
}

}  // namespace qpc
