#pragma once

#include <vector>

#include "qpcluster/positivity.hpp"
#include "qpcluster/quantum_seed.hpp"

namespace qpc {

/// A seed reached from the root by a sequence without immediate repeats,
/// with the invariants checked on arrival.
struct SeedVisit {
  std::vector<Vertex> sequence;
  QuantumSeed seed;
  bool compatible = false;
  bool quasi_commuting = false;
  bool involutive = false;  // mutating back at the last vertex returns the parent
};

/// All sequences of length <= depth (the root included), in lexicographic order.
std::vector<SeedVisit> enumerate_seeds(const QuantumSeed& root, int depth);
/// Parallel over first-level branches; same output as enumerate_seeds.
std::vector<SeedVisit> enumerate_seeds_parallel(const QuantumSeed& root, int depth);

/// Nonzero n >= 0 with principal entries in 0..max_exponent, frozen entries 0.
std::vector<LatticeVector> cluster_monomial_exponents(int rank, int principal, int max_exponent);

struct PositivitySweepEntry {
  std::size_t visit;  // index into the visit list
  PositivityReport report;
};

/// positivity_report for every (visit, exponent) pair, in row-major order.
std::vector<PositivitySweepEntry> positivity_sweep(const std::vector<SeedVisit>& visits,
                                                   const std::vector<LatticeVector>& exponents,
                                                   ExpansionBasis basis = ExpansionBasis::Ordered);
std::vector<PositivitySweepEntry> positivity_sweep_serial(const std::vector<SeedVisit>& visits,
                                                          const std::vector<LatticeVector>& exponents,
                                                          ExpansionBasis basis = ExpansionBasis::Ordered);

}  // namespace qpc
