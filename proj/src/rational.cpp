#include "qpcluster/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace qpc {

std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto to_integer = [](std::string_view s) {
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  if (slash == std::string_view::npos) {
    if (!valid_int(text)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    return Rational(to_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Integer d = to_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(to_integer(num), d);
  r.canonicalize();
  return r;
}

Integer common_denominator(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

namespace {
bool integer_root(const Integer& value, unsigned k, Integer& root) {
  if (value < 0) {
    if (k % 2 == 0) return false;
    Integer pos = -value;
    if (!integer_root(pos, k, root)) return false;
    root = -root;
    return true;
  }
  return mpz_root(root.get_mpz_t(), value.get_mpz_t(), k) != 0;
}
}  // namespace

bool rational_root(const Rational& value, unsigned k, Rational& root) {
  if (k == 0) return false;
  Integer n, d;
  if (!integer_root(value.get_num(), k, n)) return false;
  if (!integer_root(value.get_den(), k, d)) return false;
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<long long> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("IntMatrix: data size does not match shape");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntMatrix p(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const long long a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
    }
  return p;
}

bool IntMatrix::is_skew_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j <= i; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace qpc
