#pragma once

#include <map>
#include <string>

#include "qpcluster/path_algebra.hpp"

namespace qpc {

/// Algebra endomorphism of the completed path algebra given on arrows.
/// Arrows without an entry are fixed. Images must be combinations of paths
/// of length >= 1 with the endpoints of the arrow they replace.
class Substitution {
 public:
  Substitution() = default;

  void set(const Label& a, NCPoly image);
  NCPoly image(const Label& a) const;
  const std::map<Label, NCPoly>& images() const { return images_; }
  bool is_identity() const { return images_.empty(); }

  /// Image of a word, dropping paths longer than max_len. `dropped` is set
  /// when anything was discarded.
  NCPoly apply(const Word& w, std::size_t max_len, bool* dropped = nullptr) const;
  NCPoly apply(const NCPoly& p, std::size_t max_len, bool* dropped = nullptr) const;

  /// Image of a potential, valid to min(W.valid_to, order).
  Potential apply(const Potential& w, int order) const;
  /// Same, but without truncation below `cap`; reports dropped terms.
  Potential apply_capped(const Potential& w, std::size_t cap, bool* dropped) const;

  /// First *this, then `next`: the endomorphism a -> next(this(a)),
  /// truncated at paths of length max_len.
  Substitution then(const Substitution& next, std::size_t max_len) const;

  /// Every image has linear part exactly the arrow itself.
  bool is_unitriangular() const;

  std::string to_string() const;

 private:
  std::map<Label, NCPoly> images_;
};

}  // namespace qpc
