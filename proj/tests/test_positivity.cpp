#include <doctest.h>

#include "qpcluster/positivity.hpp"
#include "qpcluster/sweep.hpp"
#include "support/oracles.hpp"

using namespace qpc;
using qpc::testing::load;
using qpc::testing::vpoly;

TEST_CASE("Lefschetz decompositions of the examples") {
  auto r = lefschetz_decompose(vpoly({{-1, 1}, {1, 1}}));
  REQUIRE(r.ok);
  CHECK(r.decomposition.center == 0);
  CHECK(r.decomposition.parts == std::map<long long, Integer>{{1, 1}});

  r = lefschetz_decompose(vpoly({{0, 1}, {2, 1}, {4, 1}}));
  REQUIRE(r.ok);
  CHECK(r.decomposition.center == 2);
  CHECK(r.decomposition.parts == std::map<long long, Integer>{{2, 1}});

  r = lefschetz_decompose(vpoly({{0, 1}, {4, 1}}));
  CHECK_FALSE(r.ok);
  CHECK(r.failure == "non-unimodal");

  r = lefschetz_decompose(vpoly({{0, 2}, {2, 3}, {4, 2}}));
  REQUIRE(r.ok);
  CHECK(r.decomposition.center == 2);
  CHECK(r.decomposition.parts == std::map<long long, Integer>{{0, 1}, {2, 2}});
  CHECK(format_parts(r.decomposition) == "0:1,2:2");
}

TEST_CASE("Lefschetz failure reasons") {
  CHECK(lefschetz_decompose(vpoly({{0, -1}})).failure == "negative");
  CHECK(lefschetz_decompose(vpoly({{-1, 1}, {0, 1}, {1, 1}})).failure == "parity-mix");
  CHECK(lefschetz_decompose(vpoly({{0, 1}, {2, 2}})).failure == "asymmetric");
  CHECK_THROWS_AS(lefschetz_decompose(QCoeff()), std::invalid_argument);
}

TEST_CASE("decompositions re-expand to their input") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> center(-5, 5), k(0, 6), m(1, 4), count(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    LefschetzDecomposition d;
    d.center = center(rng);
    const int parity = k(rng) % 2;
    for (int i = count(rng); i > 0; --i) d.parts[2 * (k(rng) / 2) + parity] += m(rng);
    const QCoeff a = recompose(d);
    const auto r = lefschetz_decompose(a);
    REQUIRE(r.ok);
    CHECK(recompose(r.decomposition) == a);
    CHECK(r.decomposition.center == d.center);
    CHECK(r.decomposition.parts == d.parts);
    CHECK(uniform_parity(a));
  }
}

TEST_CASE("A2: every cluster variable expands with coefficients that are powers of v") {
  const QuiverDocument d = load("a2_quantum.qv");
  const QuantumSeed root = initial_seed(exchange_matrix(d.qp.quiver), *d.lambda);
  QuantumSeed s = root;
  for (Vertex v : {1, 2, 1, 2, 1}) {
    s = mutate_seed(s, v);
    const int i = v - 1;
    LatticeVector n(2, 0);
    n[i] = 1;
    const auto rep = positivity_report(s, n);
    CHECK(rep.all_lefschetz);
    for (const auto& c : rep.coefficients) {
      CHECK(c.coefficient.terms().size() == 1);
      CHECK(c.coefficient.at_one() == 1);
    }
    const auto sym = positivity_report(s, n, ExpansionBasis::Symmetric);
    for (const auto& c : sym.coefficients) CHECK(c.coefficient == QCoeff(1));
  }
}

TEST_CASE("Kronecker depth-2 variable against the hand expansion") {
  const Quantization qz = quantize(load("kronecker.qv").qp.quiver);
  const QuantumSeed s = mutate_seed(initial_seed(exchange_matrix(qz.quiver), qz.lambda), {1, 2});
  // x''_2 = x_2^3 x_3^2 x_4 / x_1^2 + 2 x_2 x_3 x_4 / x_1^2 + x_4 / (x_1^2 x_2) + 1 / x_2
  const std::map<LatticeVector, long> hand{
      {{-2, 3, 2, 1}, 1}, {{-2, 1, 1, 1}, 2}, {{-2, -1, 0, 1}, 1}, {{0, -1, 0, 0}, 1}};
  const auto rep = positivity_report(s, {0, 1, 0, 0});
  REQUIRE(rep.coefficients.size() == hand.size());
  for (const auto& c : rep.coefficients) {
    REQUIRE(hand.count(c.k));
    CHECK(c.coefficient.at_one() == hand.at(c.k));
    REQUIRE(c.lefschetz.ok);
    const long long width = c.coefficient.max_exponent() - c.coefficient.min_exponent();
    if (hand.at(c.k) == 2) {
      CHECK(width == 2);
      CHECK(c.lefschetz.decomposition.parts == std::map<long long, Integer>{{1, 1}});
    } else {
      CHECK(width == 0);
      CHECK(c.lefschetz.decomposition.parts == std::map<long long, Integer>{{0, 1}});
    }
  }
  CHECK(rep.all_uniform_parity);
}

TEST_CASE("root monomial") {
  const QuiverDocument d = load("a2_quantum.qv");
  const QuantumSeed root = initial_seed(exchange_matrix(d.qp.quiver), *d.lambda);
  const auto rep = positivity_report(root, {1, 1});
  REQUIRE(rep.coefficients.size() == 1);
  CHECK(rep.coefficients[0].lefschetz.ok);
  CHECK(rep.coefficients[0].lefschetz.decomposition.parts == std::map<long long, Integer>{{0, 1}});
}
