#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpcluster/quantum_seed.hpp"

namespace qpc {

/// sum_k m_k P_{N,k} with P_{N,k} = v^N (v^{-k} + v^{-k+2} + ... + v^k).
/// N is in units of v (the q-exponent is N/2).
struct LefschetzDecomposition {
  long long center = 0;
  std::map<long long, Integer> parts;  // k -> m_k >= 1, all k of one parity
};

struct LefschetzResult {
  bool ok = false;
  std::string failure;  // negative | parity-mix | asymmetric | non-unimodal
  LefschetzDecomposition decomposition;
};

QCoeff lefschetz_polynomial(long long n, long long k);

/// Throws std::invalid_argument on zero input.
LefschetzResult lefschetz_decompose(const QCoeff& a);

QCoeff recompose(const LefschetzDecomposition& d);

/// Every v-exponent of a has the same parity.
bool uniform_parity(const QCoeff& a);

struct CoefficientReport {
  LatticeVector k;
  QCoeff coefficient;
  bool positive = false;
  bool uniform_parity = false;
  LefschetzResult lefschetz;
};

struct PositivityReport {
  LatticeVector monomial;
  std::vector<CoefficientReport> coefficients;
  bool all_positive = true;
  bool all_lefschetz = true;
  bool all_uniform_parity = true;
};

/// Expands M(n) of the seed in the root cluster and decomposes every
/// coefficient.
PositivityReport positivity_report(const QuantumSeed& seed, const LatticeVector& n,
                                   ExpansionBasis basis = ExpansionBasis::Ordered);

/// "k:m,k:m" in increasing k.
std::string format_parts(const LefschetzDecomposition& d);

}  // namespace qpc
