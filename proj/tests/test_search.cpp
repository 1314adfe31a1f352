#include "skly3/reps.hpp"
#include "skly3/search.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace skly3;

namespace {

const ComplexField C(1e-9);

ParameterTriple<ComplexField> ctriple(cplx a, cplx b, cplx c) { return ParameterTriple<ComplexField>(C, a, b, c); }

std::vector<double> random_point(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& e : v) e = normal(rng);
  return v;
}

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double e : v) s += e * e;
  return std::sqrt(s);
}

} // namespace

TEST(RelationSystem, GradientMatchesCentralDifferences) {
  std::mt19937_64 rng(20);
  const std::vector<RelationSystem> systems{RelationSystem(1.0, 2.0, 3.0, 2), RelationSystem(1.0, 1.0, 5.0, 3),
                                            RelationSystem(cplx(1, 1), cplx(0.5, -2), 0.25, 2)};
  for (int t = 0; t < 20; ++t) {
    const auto& sys = systems[t % systems.size()];
    auto v = random_point(rng, sys.num_parameters());
    const auto g = sys.gradient(v.data());
    std::vector<double> fd(v.size());
    const double h = 1e-6;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double keep = v[i];
      v[i] = keep + h;
      const double fp = sys.objective(v.data());
      v[i] = keep - h;
      const double fm = sys.objective(v.data());
      v[i] = keep;
      fd[i] = (fp - fm) / (2 * h);
    }
    std::vector<double> diff(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) diff[i] = g[i] - fd[i];
    EXPECT_LT(norm(diff) / norm(g), 1e-6) << t;
  }
}

TEST(RelationSystem, JacobianIsConsistentWithGradient) {
  std::mt19937_64 rng(6);
  const RelationSystem sys(1.0, 1.0, 5.0, 2);
  const auto v = random_point(rng, sys.num_parameters());
  const std::size_t m = sys.num_relation_residuals(), n = sys.num_parameters();
  std::vector<double> res(m), jac(m * n);
  sys.residuals(v.data(), res.data(), jac.data());
  double f = 0.0;
  for (double r : res) f += r * r;
  EXPECT_NEAR(f, sys.objective(v.data()), 1e-9 * f);
  const auto g = sys.gradient(v.data());
  std::vector<double> diff(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += 2 * jac[i * n + j] * res[i];
    diff[j] = s - g[j];
  }
  EXPECT_LT(norm(diff) / norm(g), 1e-10);
}

TEST(RelationSystem, ExactRepresentationHasZeroObjective) {
  const CyclotomicField K(12);
  const auto rep = family_s1m1m1(K, 2, K.from_int(2), K.from_int(-1), 5);
  const RelationSystem sys(1.0, -1.0, -1.0, 2);
  std::array<Eigen::MatrixXcd, 3> m;
  for (int g = 0; g < 3; ++g) {
    m[g] = Eigen::MatrixXcd(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m[g](i, j) = rep.generator(g)(i, j).embed();
  }
  const auto v = sys.pack(m);
  EXPECT_LT(sys.objective(v.data()), 1e-26);
}

TEST(Search, DeterministicForSeedAndThreadCount) {
  const auto p = ctriple(1.0, 1.0, 5.0);
  SearchOptions a;
  a.restarts = 12;
  a.seed = 77;
  a.threads = 1;
  SearchOptions b = a;
  b.threads = 4;
  const auto ha = search_numeric(p, 2, a), hb = search_numeric(p, 2, b);
  ASSERT_EQ(ha.size(), hb.size());
  for (std::size_t i = 0; i < ha.size(); ++i) {
    EXPECT_EQ(ha[i].restart, hb[i].restart);
    EXPECT_EQ(ha[i].objective, hb[i].objective);
    EXPECT_EQ(ha[i].rep.X.data(), hb[i].rep.X.data());
  }
  SearchOptions c = a;
  c.seed = 78;
  const auto hc = search_numeric(p, 2, c);
  bool differs = ha.size() != hc.size();
  for (std::size_t i = 0; !differs && i < ha.size(); ++i) differs = ha[i].rep.X.data() != hc[i].rep.X.data();
  EXPECT_TRUE(differs);
}

TEST(Search, FindsTwoDimensionalIrrepsWhenSigmaHasOrderTwo) {
  SearchOptions opt;
  opt.restarts = 20;
  const auto p = ctriple(1.0, 1.0, 5.0);
  const auto hits = search_numeric(p, 2, opt);
  std::size_t irreducible = 0;
  for (const auto& h : hits) {
    EXPECT_LT(verify_rep(p, h.rep).value, 1e-10);
    if (h.classification.irreducible) {
      ++irreducible;
      EXPECT_TRUE(h.classification.g.scalar);
    }
  }
  EXPECT_GT(irreducible, 0u);
}

TEST(Search, RejectsBadDimension) { EXPECT_THROW(RelationSystem(1.0, 1.0, 1.0, 0), PreconditionError); }
