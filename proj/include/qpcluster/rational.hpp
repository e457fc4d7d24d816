#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qpc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Renders as "p/q"; integers render as "p/1" so the output re-parses as a term coefficient.
std::string format_rational(const Rational& r);

/// Accepts "p", "p/q", with optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Least common multiple of all denominators.
Integer common_denominator(const std::vector<Rational>& values);

/// Exact k-th root of a rational, if one exists in Q.
bool rational_root(const Rational& value, unsigned k, Rational& root);

/// Dense row-major integer matrix, 0-based indexing.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}
  IntMatrix(int rows, int cols, std::vector<long long> data);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  long long& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  long long operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool is_skew_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<long long> data_;
};

}  // namespace qpc
