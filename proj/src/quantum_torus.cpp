#include "qpcluster/quantum_torus.hpp"

#include <omp.h>

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qpc {

// ---------------------------------------------------------------- QCoeff

QCoeff QCoeff::v_power(long long e, Integer c) {
  QCoeff out;
  out.add(e, c);
  return out;
}

void QCoeff::add(long long e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer QCoeff::coefficient(long long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

QCoeff QCoeff::shifted(long long k) const {
  QCoeff out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

QCoeff QCoeff::bar() const {
  QCoeff out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

Integer QCoeff::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::optional<QCoeff> QCoeff::divide_exact(const QCoeff& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero coefficient");
  QCoeff quot;
  if (is_zero()) return quot;
  QCoeff rem = *this;
  const long long dtop = d.max_exponent();
  const long long lowest = min_exponent() - d.min_exponent();
  const Integer lead = d.terms_.rbegin()->second;
  while (!rem.is_zero()) {
    const long long shift = rem.max_exponent() - dtop;
    if (shift < lowest) return std::nullopt;
    const Integer c = rem.terms_.rbegin()->second;
    if (c % lead != 0) return std::nullopt;
    const Integer f = c / lead;
    quot.add(shift, f);
    for (const auto& [de, dc] : d.terms_) rem.add(de + shift, -f * dc);
  }
  return quot;
}

QCoeff& QCoeff::operator+=(const QCoeff& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

QCoeff& QCoeff::operator-=(const QCoeff& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

QCoeff operator*(const QCoeff& a, const QCoeff& b) {
  QCoeff out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
  return out;
}

std::string QCoeff::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      a = abs(a);
    }
    first = false;
    if (e == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << ' ';
    os << 'v';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

// ------------------------------------------------------------- lattice

long long skew_pairing(const SkewForm& lambda, const LatticeVector& e, const LatticeVector& f) {
  const int n = lambda.rows();
  if (static_cast<int>(e.size()) != n || static_cast<int>(f.size()) != n)
    throw std::invalid_argument("skew_pairing: rank mismatch");
  long long s = 0;
  for (int i = 0; i < n; ++i) {
    if (e[i] == 0) continue;
    long long row = 0;
    for (int j = 0; j < n; ++j) row += lambda(i, j) * f[j];
    s += e[i] * row;
  }
  return s;
}

bool GradedLex::operator()(const LatticeVector& a, const LatticeVector& b) const {
  const long long da = std::accumulate(a.begin(), a.end(), 0LL);
  const long long db = std::accumulate(b.begin(), b.end(), 0LL);
  if (da != db) return da < db;
  return a < b;
}

std::string format_lattice(const LatticeVector& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  return out;
}

// -------------------------------------------------------- TorusElement

TorusElement TorusElement::monomial(const LatticeVector& e, QCoeff c) {
  TorusElement t(static_cast<int>(e.size()));
  t.add(e, c);
  return t;
}

TorusElement TorusElement::one(int rank) { return monomial(LatticeVector(rank, 0)); }

void TorusElement::add(const LatticeVector& e, const QCoeff& c) {
  if (static_cast<int>(e.size()) != rank_) throw std::invalid_argument("torus element: rank mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QCoeff TorusElement::coefficient(const LatticeVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QCoeff() : it->second;
}

TorusElement TorusElement::shifted(long long k) const {
  TorusElement out(rank_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.shifted(k));
  return out;
}

std::map<LatticeVector, Integer> TorusElement::at_one() const {
  std::map<LatticeVector, Integer> out;
  for (const auto& [e, c] : terms_) {
    Integer v = c.at_one();
    if (v != 0) out.emplace(e, v);
  }
  return out;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  if (o.rank_ != rank_) throw std::invalid_argument("torus element: rank mismatch");
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  if (o.rank_ != rank_) throw std::invalid_argument("torus element: rank mismatch");
  for (const auto& [e, c] : o.terms_) add(e, QCoeff() - c);
  return *this;
}

std::string TorusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << '(' << it->second.to_string() << ") X^(" << format_lattice(it->first) << ')';
  }
  return os.str();
}

// ------------------------------------------------------------ products

namespace {

void check_ranks(const TorusElement& x, const TorusElement& y, const SkewForm& lambda) {
  if (x.rank() != y.rank() || lambda.rows() != x.rank() || lambda.cols() != x.rank())
    throw std::invalid_argument("torus_mul: rank mismatch");
}

void accumulate_row(const LatticeVector& e, const QCoeff& c, const TorusElement& y, const SkewForm& lambda,
                    TorusElement& out) {
  LatticeVector sum(e.size());
  for (const auto& [f, d] : y.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) sum[i] = e[i] + f[i];
    out.add(sum, (c * d).shifted(skew_pairing(lambda, e, f)));
  }
}

}  // namespace

TorusElement torus_mul_serial(const TorusElement& x, const TorusElement& y, const SkewForm& lambda) {
  check_ranks(x, y, lambda);
  TorusElement out(x.rank());
  for (const auto& [e, c] : x.terms()) accumulate_row(e, c, y, lambda, out);
  return out;
}

TorusElement torus_mul(const TorusElement& x, const TorusElement& y, const SkewForm& lambda) {
  check_ranks(x, y, lambda);
  const std::vector<std::pair<LatticeVector, QCoeff>> rows(x.terms().begin(), x.terms().end());
  const int nrows = static_cast<int>(rows.size());
  if (nrows < 2 || static_cast<std::size_t>(nrows) * y.size() < 64) return torus_mul_serial(x, y, lambda);
  const int nthreads = omp_get_max_threads();
  std::vector<TorusElement> partial(nthreads, TorusElement(x.rank()));
#pragma omp parallel num_threads(nthreads)
  {
    TorusElement& local = partial[omp_get_thread_num()];
#pragma omp for schedule(dynamic)
    for (int i = 0; i < nrows; ++i) accumulate_row(rows[i].first, rows[i].second, y, lambda, local);
  }
  TorusElement out(x.rank());
  for (const auto& p : partial) out += p;
  return out;
}

TorusElement exact_divide(const TorusElement& x, const TorusElement& d, const SkewForm& lambda) {
  check_ranks(x, d, lambda);
  if (d.is_zero()) throw std::domain_error("not exactly divisible: division by zero");
  TorusElement quot(x.rank());
  if (x.is_zero()) return quot;
  const int n = x.rank();
  // Coordinate box that the quotient's exponents must lie in.
  LatticeVector xmin(n), xmax(n), dmin(n), dmax(n);
  auto bounds = [n](const TorusElement& t, LatticeVector& lo, LatticeVector& hi) {
    bool first = true;
    for (const auto& [e, c] : t.terms())
      for (int i = 0; i < n; ++i) {
        if (first || e[i] < lo[i]) lo[i] = e[i];
        if (first || e[i] > hi[i]) hi[i] = e[i];
        if (i == n - 1) first = false;
      }
  };
  bounds(x, xmin, xmax);
  bounds(d, dmin, dmax);
  const auto& [b, lead] = *d.terms().rbegin();
  TorusElement rem = x;
  LatticeVector e(n);
  while (!rem.is_zero()) {
    const auto& [top, rc] = *rem.terms().rbegin();
    for (int i = 0; i < n; ++i) {
      e[i] = top[i] - b[i];
      if (e[i] < xmin[i] - dmin[i] || e[i] > xmax[i] - dmax[i])
        throw std::domain_error("not exactly divisible");
    }
    auto c = rc.divide_exact(lead.shifted(skew_pairing(lambda, e, b)));
    if (!c) throw std::domain_error("not exactly divisible");
    TorusElement term = TorusElement::monomial(e, *c);
    quot.add(e, *c);
    rem -= torus_mul_serial(term, d, lambda);
  }
  return quot;
}

}  // namespace qpc
