#pragma once

#include <map>
#include <string>

#include "qpcluster/qp_mutation.hpp"

namespace qpc {

/// Verdicts of the right-equivalence search. The search is semi-effective:
/// NotEstablished does not mean the QPs are inequivalent.
enum class EquivalenceVerdict { Identical, Equivalent, NotEstablished, QuiversDiffer };

std::string to_string(EquivalenceVerdict v);

struct EquivalenceResult {
  EquivalenceVerdict verdict = EquivalenceVerdict::NotEstablished;
  int order = 0;                        // compared up to this path length
  std::map<Label, Label> matching;      // arrow of b -> arrow of a
  Substitution witness;                 // on a's labels: witness(matched W_b) = W_a
  std::string detail;
};

/// Looks for an arrow bijection (permutations of parallel arrows), a diagonal
/// rescaling of arrows and a unitriangular substitution carrying W_b to W_a
/// modulo paths longer than `order` (capped by both accuracies).
EquivalenceResult compare_qps(const QP& a, const QP& b, int order);

/// True for Identical or Equivalent.
bool equivalent_up_to_normal_form(const QP& a, const QP& b, int order);

}  // namespace qpc
