#include "qpcluster/sweep.hpp"

#include <functional>

namespace qpc {

namespace {

SeedVisit visit(const QuantumSeed& parent, const std::vector<Vertex>& seq) {
  SeedVisit v;
  v.sequence = seq;
  v.seed = mutate_seed(parent, seq.back());
  v.compatible = check_compatible(v.seed.b, v.seed.lambda);
  v.quasi_commuting = check_quasi_commutation(v.seed);
  QuantumSeed back = mutate_seed(v.seed, seq.back());
  v.involutive = same_seed(back, parent);
  return v;
}

void descend(const QuantumSeed& seed, std::vector<Vertex>& seq, int depth, std::vector<SeedVisit>& out) {
  if (static_cast<int>(seq.size()) >= depth) return;
  for (Vertex s = 1; s <= seed.principal_count(); ++s) {
    if (!seq.empty() && seq.back() == s) continue;
    seq.push_back(s);
    out.push_back(visit(seed, seq));
    const QuantumSeed next = out.back().seed;
    descend(next, seq, depth, out);
    seq.pop_back();
  }
}

SeedVisit root_visit(const QuantumSeed& root) {
  SeedVisit v;
  v.seed = root;
  v.compatible = check_compatible(root.b, root.lambda);
  v.quasi_commuting = check_quasi_commutation(root);
  v.involutive = true;
  return v;
}

}  // namespace

std::vector<SeedVisit> enumerate_seeds(const QuantumSeed& root, int depth) {
  std::vector<SeedVisit> out{root_visit(root)};
  std::vector<Vertex> seq;
  descend(root, seq, depth, out);
  return out;
}

std::vector<SeedVisit> enumerate_seeds_parallel(const QuantumSeed& root, int depth) {
  const int m = root.principal_count();
  std::vector<std::vector<SeedVisit>> branches(m);
  if (depth >= 1) {
#pragma omp parallel for schedule(dynamic)
    for (int s = 1; s <= m; ++s) {
      std::vector<Vertex> seq{s};
      auto& out = branches[s - 1];
      out.push_back(visit(root, seq));
      const QuantumSeed next = out.back().seed;
      descend(next, seq, depth, out);
    }
  }
  std::vector<SeedVisit> out{root_visit(root)};
  for (auto& b : branches)
    for (auto& v : b) out.push_back(std::move(v));
  return out;
}

std::vector<LatticeVector> cluster_monomial_exponents(int rank, int principal, int max_exponent) {
  std::vector<LatticeVector> out;
  LatticeVector cur(rank, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == principal) {
      bool nonzero = false;
      for (int j = 0; j < principal; ++j) nonzero |= cur[j] != 0;
      if (nonzero) out.push_back(cur);
      return;
    }
    for (int e = 0; e <= max_exponent; ++e) {
      cur[i] = e;
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
  return out;
}

std::vector<PositivitySweepEntry> positivity_sweep_serial(const std::vector<SeedVisit>& visits,
                                                          const std::vector<LatticeVector>& exponents,
                                                          ExpansionBasis basis) {
  std::vector<PositivitySweepEntry> out;
  for (std::size_t i = 0; i < visits.size(); ++i)
    for (const auto& n : exponents) out.push_back({i, positivity_report(visits[i].seed, n, basis)});
  return out;
}

std::vector<PositivitySweepEntry> positivity_sweep(const std::vector<SeedVisit>& visits,
                                                   const std::vector<LatticeVector>& exponents,
                                                   ExpansionBasis basis) {
  const long long total = static_cast<long long>(visits.size() * exponents.size());
  std::vector<PositivitySweepEntry> out(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic)
  for (long long t = 0; t < total; ++t) {
    const std::size_t i = static_cast<std::size_t>(t) / exponents.size();
    const std::size_t j = static_cast<std::size_t>(t) % exponents.size();
    out[static_cast<std::size_t>(t)] = {i, positivity_report(visits[i].seed, exponents[j], basis)};
  }
  return out;
}

}  // namespace qpc
