#pragma once

#include <random>
#include <string>
#include <vector>

#include "qpcluster/path_algebra.hpp"
#include "qpcluster/quantum_torus.hpp"
#include "qpcluster/quiver.hpp"
#include "qpcluster/quiver_file.hpp"

namespace qpc::testing {

std::string data_path(const std::string& name);
QuiverDocument load(const std::string& name);

/// Random 2-cycle-free quiver on lo..hi vertices, each unordered pair joined
/// by 0..max_parallel arrows of one orientation. Labels x1, x2, ...
Quiver random_quiver(std::mt19937_64& rng, int lo, int hi, int max_parallel = 2, bool acyclic = false,
                     double density = 0.6);

/// Random quiver on exactly n vertices that contains at least one cycle.
Quiver random_cyclic_quiver(std::mt19937_64& rng, int n, int max_parallel = 2);

/// d/da W computed from the full rotation orbit of every term: each rotation
/// beginning with a contributes its tail.
NCPoly rotation_derivative(const Potential& w, const Label& a);

/// Every word of length 2..max_len over the arrow alphabet that closes into a
/// cycle, deduplicated up to rotation by brute force. Optionally only cycles
/// visiting no vertex twice.
std::vector<Word> brute_force_cycles(const Quiver& q, int max_len, bool simple_only);

/// Independent classical exchange-matrix mutation.
IntMatrix classical_mutate(const IntMatrix& b, int s);

/// Commutative cluster mutation evaluated at a rational point: starting from
/// x = point, x'_s x_s = prod x_i^[b_is]+ + prod x_i^[-b_is]+.
std::vector<Rational> classical_cluster(IntMatrix b, const std::vector<Vertex>& seq, std::vector<Rational> point);

/// Value of a commutative Laurent polynomial at a rational point.
Rational evaluate_laurent(const std::map<LatticeVector, Integer>& f, const std::vector<Rational>& point);

/// Nonzero rationals of small height.
std::vector<Rational> random_point(std::mt19937_64& rng, int n);

/// Laurent polynomial in v from (exponent, coefficient) pairs.
QCoeff vpoly(std::initializer_list<std::pair<long long, long>> terms);

}  // namespace qpc::testing
