#include "skly3/orbit_ring.hpp"
#include "skly3/reps.hpp"
#include "printers.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace skly3;

namespace {

const CyclotomicField Q(1);
using QOrbit = OrbitElement<CyclotomicField>;

QOrbit random_element(std::mt19937_64& rng, std::size_t n, std::size_t max_degree) {
  std::uniform_int_distribution<long> c(-6, 6);
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  QOrbit e{Q, deg(rng), {}};
  for (std::size_t l = 0; l < n; ++l) e.coeffs.push_back(Q.from_int(c(rng)));
  return e;
}

QOrbit make(std::size_t d, const std::vector<long>& c) {
  QOrbit e{Q, d, {}};
  for (long v : c) e.coeffs.push_back(Q.from_int(v));
  return e;
}

} // namespace

TEST(OrbitRing, ShiftRuleExample) {
  const auto a = make(1, {2, 3, 5}), b = make(1, {7, 11, 13});
  EXPECT_EQ(orbit_mul(a, b), make(2, {2 * 13, 3 * 7, 5 * 11}));
}

TEST(OrbitRing, UnitAndSizeOne) {
  std::mt19937_64 rng(1);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto e = random_element(rng, n, 4);
    const auto u = QOrbit::unit(Q, n);
    EXPECT_EQ(orbit_mul(u, e), e);
    EXPECT_EQ(orbit_mul(e, u), e);
  }
  EXPECT_EQ(orbit_mul(make(2, {3}), make(5, {4})), make(7, {12}));
  EXPECT_THROW(orbit_mul(make(0, {1, 2}), make(0, {1})), DimensionMismatch);
  EXPECT_THROW(QOrbit::basis(Q, 3, 1, 0), PreconditionError);
}

TEST(OrbitRing, Associative) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 6;
    const auto a = random_element(rng, n, 4), b = random_element(rng, n, 4), c = random_element(rng, n, 4);
    EXPECT_EQ(orbit_mul(orbit_mul(a, b), c), orbit_mul(a, orbit_mul(b, c)));
  }
}

TEST(Phi, Examples) {
  const auto m = phi_to_matrix(make(1, {2, 3}));
  EXPECT_EQ(m.to_string(), "[[0, 2*x], [3*x, 0]]");
  GradedMatrix<CyclotomicField> diag(Q, 2);
  diag.add(0, 0, 0, Q.from_int(2));
  diag.add(1, 1, 0, Q.from_int(3));
  EXPECT_EQ(phi_to_matrix(make(0, {2, 3})), diag);
}

TEST(Phi, MultiplicativeAndPatterned) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 6;
    const auto a = random_element(rng, n, 6), b = random_element(rng, n, 6);
    EXPECT_EQ(phi_to_matrix(orbit_mul(a, b)), phi_to_matrix(a) * phi_to_matrix(b)) << n;
    EXPECT_TRUE(phi_to_matrix(a).has_pattern(a.degree));
  }
}

TEST(Phi, LinearAndInjectivePerDegree) {
  std::mt19937_64 rng(4);
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t d = 0; d <= 6; ++d) {
      auto a = random_element(rng, n, 0), b = random_element(rng, n, 0);
      a.degree = b.degree = d;
      QOrbit sum{Q, d, {}};
      for (std::size_t l = 0; l < n; ++l) sum.coeffs.push_back(a.coeffs[l] + b.coeffs[l]);
      EXPECT_EQ(phi_to_matrix(sum), phi_to_matrix(a) + phi_to_matrix(b));
      // the n basis elements land on n distinct pattern positions
      std::set<std::pair<std::size_t, std::size_t>> positions;
      for (std::size_t l = 1; l <= n; ++l) {
        const auto m = phi_to_matrix(QOrbit::basis(Q, n, d, l));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (!m.entry(i, j).empty()) positions.insert({i, j});
      }
      EXPECT_EQ(positions.size(), n);
    }
}

TEST(Evaluation, IsAHomomorphism) {
  std::mt19937_64 rng(5);
  const auto lambda = Q.from_int(5);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 6;
    const auto a = random_element(rng, n, 6), b = random_element(rng, n, 6);
    EXPECT_EQ(evaluate_orbit(orbit_mul(a, b), lambda), evaluate_orbit(a, lambda) * evaluate_orbit(b, lambda));
  }
}

TEST(Evaluation, IrrepsHaveDimensionN) {
  for (long lam : {1, 5}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto gens = evaluation_irrep(Q, n, Q.from_int(lam));
      ASSERT_EQ(gens.size(), n);
      EXPECT_EQ(gens[0].rows(), n);
      const auto r = irreducibility(gens);
      EXPECT_TRUE(r.irreducible) << n << " " << lam;
      EXPECT_EQ(r.closure_dimension, n * n);
    }
  }
  EXPECT_THROW(evaluation_irrep(Q, 3, Q.zero()), PreconditionError);
}
