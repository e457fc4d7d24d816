#pragma once

#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpcluster/quiver.hpp"
#include "qpcluster/rational.hpp"
#include "qpcluster/word.hpp"

namespace qpc {

/// Truncation order of a formal potential: every cycle of length <= valid_to
/// carries its exact coefficient. kExact marks an algebraic potential.
inline constexpr int kExact = INT_MAX;

/// Finite rational combination of paths (no zero coefficients stored).
class NCPoly {
 public:
  using Terms = std::map<Word, Rational>;

  NCPoly() = default;
  static NCPoly monomial(Word w, Rational c = 1);

  void add(const Word& w, const Rational& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Word& w) const;

  /// Smallest and largest path length in the support (0 for the zero poly).
  std::size_t min_length() const;
  std::size_t max_length() const;
  NCPoly truncated(std::size_t max_len) const;
  NCPoly homogeneous_part(std::size_t len) const;

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Rational& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Rational& c) { return a *= c; }
  /// Concatenation product: (p * r) applies r first.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Rational combination of cyclic words keyed by canonical rotation, plus
/// its truncation order.
class Potential {
 public:
  using Terms = std::map<Word, Rational>;

  Potential() = default;
  explicit Potential(int valid_to) : valid_to_(valid_to) {}

  /// Adds c times the cyclic class of w. Terms longer than valid_to are dropped.
  void add_cycle(const Word& w, const Rational& c);
  Rational coefficient(const Word& cycle) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int valid_to() const { return valid_to_; }
  bool is_exact() const { return valid_to_ == kExact; }
  void set_valid_to(int n);

  std::size_t min_length() const;
  std::size_t max_length() const;
  Potential homogeneous_part(std::size_t len) const;

  Potential& operator+=(const Potential& o);  // valid_to becomes the minimum
  Potential& operator-=(const Potential& o);
  Potential& operator*=(const Rational& c);
  friend Potential operator+(Potential a, const Potential& b) { return a += b; }
  friend Potential operator-(Potential a, const Potential& b) { return a -= b; }

  /// Equality of terms and of the truncation order.
  friend bool operator==(const Potential&, const Potential&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
  int valid_to_ = kExact;
};

/// Arrow weights and the declared degree |W| > 0.
struct Grading {
  std::map<Label, long long> weights;
  long long degree = 1;
};

/// Weights read off the quiver's arrows, with the given degree.
Grading grading_of(const Quiver& q, long long degree);

/// Sum over occurrences of a in each stored lift u = b a c of the path c b,
/// scaled by the coefficient. Throws std::out_of_range for unknown arrows.
NCPoly cyclic_derivative(const Quiver& q, const Potential& w, const Label& a);

/// One derivative per arrow, in quiver arrow order.
std::vector<std::pair<Label, NCPoly>> jacobi_generators(const Quiver& q, const Potential& w);

struct HomogeneityReport {
  bool homogeneous = false;
  long long degree = 0;                             // common weight when homogeneous
  std::vector<std::pair<Word, long long>> offending;  // cycles whose weight differs from |W|
  bool is_cut = false;                              // weights in {0,1} and degree 1
};

/// Succeeds iff every cycle of W has weight |W| > 0. Throws
/// std::invalid_argument when a support arrow has no weight or |W| <= 0.
HomogeneityReport check_homogeneous(const Potential& w, const Grading& g);

/// Weight of a path under a grading.
long long word_weight(const Word& w, const Grading& g);

/// Keeps cycles of length <= n; valid_to becomes min(valid_to, n).
Potential truncate(const Potential& w, int n);

/// All cyclic words (canonical rotations) of length 2..max_len, sorted by
/// (length, word). Includes non-simple cycles and proper powers.
std::vector<Word> enumerate_cycles(const Quiver& q, int max_len);

/// Paths (as written words) of exactly `len` arrows from `from` to `to`.
std::vector<Word> enumerate_paths(const Quiver& q, Vertex from, Vertex to, int len);

/// Bound on |numerator| and denominator of sampled coefficients.
inline constexpr int kRandomCoefficientBound = 9;

/// Independent nonzero rational coefficient p/q, 1 <= |p|, q <= 9, on every
/// cycle class of length 2..max_len. Deterministic in the seed.
Potential random_potential(const Quiver& q, int max_len, std::uint64_t seed);

/// Random nonzero coefficient on each listed cycle.
Potential random_combination(const std::vector<Word>& cycles, std::uint64_t seed);

/// Keeps cycles whose arrows all lie in `q` (a full subquiver).
Potential restrict_potential(const Potential& w, const Quiver& q);

}  // namespace qpc
