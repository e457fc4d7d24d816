#pragma once

#include <optional>
#include <vector>

#include "qpcluster/quantum_torus.hpp"
#include "qpcluster/quiver.hpp"

namespace qpc {

/// B^T Lambda = [I_m | 0].
bool check_compatible(const ExchangeMatrix& b, const SkewForm& lambda);

struct Quantization {
  Quiver quiver;     // original vertices, then one frozen v' per principal v, arrow v -> v'
  SkewForm lambda;   // blocks (m, n-m, m): [[0,0,-I],[0,0,0],[I,0,C]], C = B_top^T
};

/// Extends q by pendant frozen vertices so that a compatible form exists.
Quantization quantize(const Quiver& q);

/// Exchange matrix, commutation matrix and cluster variables written in the
/// root torus.
struct QuantumSeed {
  ExchangeMatrix b;
  SkewForm lambda;
  std::vector<TorusElement> z;
  SkewForm root_lambda;
  std::vector<Vertex> history;

  int rank() const { return static_cast<int>(z.size()); }
  int principal_count() const { return b.cols(); }
};

/// Root seed Z_i = X^{e_i}. Throws std::invalid_argument if incompatible.
QuantumSeed initial_seed(const ExchangeMatrix& b, const SkewForm& lambda);

/// Frame monomial M(c) = v^{-sum_{i<j} c_i c_j Lambda_ij} Z_1^{c_1} ... Z_n^{c_n};
/// negative exponents are handled by exact division.
TorusElement frame_monomial(const QuantumSeed& seed, const LatticeVector& c);

/// Quantum seed mutation at a principal vertex s.
QuantumSeed mutate_seed(const QuantumSeed& seed, Vertex s);
QuantumSeed mutate_seed(const QuantumSeed& seed, const std::vector<Vertex>& seq);

/// Z_i Z_j = v^{2 Lambda_ij} Z_j Z_i for all i, j.
bool check_quasi_commutation(const QuantumSeed& seed);

/// Equal (B, Lambda, Z).
bool same_seed(const QuantumSeed& a, const QuantumSeed& b);

/// Permutation p of the principal indices (frozen ones fixed) with
/// a.z[p[i]] = b.z[i], and B, Lambda permuted accordingly.
std::optional<std::vector<int>> seed_permutation(const QuantumSeed& a, const QuantumSeed& b);

enum class ExpansionBasis {
  Ordered,    // Z_1^{k_1} ... Z_n^{k_n} of the root cluster
  Symmetric,  // root frame monomials M(k) = X^k
};

/// Laurent expansion of the cluster monomial M(n) of `seed` in the root
/// cluster. Ordered basis: a_k = (coefficient of X^k) v^{-sum_{i<j} k_i k_j Lambda_ij}.
std::map<LatticeVector, QCoeff, GradedLex> expand_monomial(const QuantumSeed& seed, const LatticeVector& n,
                                                           ExpansionBasis basis = ExpansionBasis::Ordered);

}  // namespace qpc
