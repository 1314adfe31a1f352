#include "skly3/hesse.hpp"
#include "printers.hpp"

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include <chrono>

using namespace skly3;

namespace {

const CyclotomicField Q(1);
using QTriple = ParameterTriple<CyclotomicField>;
using CTriple = ParameterTriple<ComplexField>;

QTriple triple(long a, long b, long c) { return QTriple::of_ints(Q, a, b, c); }

template <Field F>
std::vector<ProjPoint<F>> iterates(const ParameterTriple<F>& p, unsigned k) {
  const CurveSpec<F> curve(p);
  const auto t = translation_point(p);
  std::vector<ProjPoint<F>> out{origin(p.field())};
  for (unsigned i = 0; i < k; ++i) out.push_back(add_points(curve, out.back(), t));
  return out;
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& monic_low_to_high) {
  const int n = static_cast<int>(monic_low_to_high.size());
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -monic_low_to_high[i];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp);
  std::vector<std::complex<double>> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return out;
}

} // namespace

TEST(PointScheme, SymbolicDeterminantIsTheHesseForm) {
  const std::vector<std::string> vars{"a", "b", "c", "x", "y", "z"};
  using P = CommPoly<CyclotomicField>;
  auto v = [&](std::size_t i) { return P::variable(Q, vars, i); };
  const P lambda = v(0) * v(0) * v(0) + v(1) * v(1) * v(1) + v(2) * v(2) * v(2);
  const P mu = v(0) * v(1) * v(2);
  const P expected = lambda * v(3) * v(4) * v(5) - mu * (v(3) * v(3) * v(3) + v(4) * v(4) * v(4) + v(5) * v(5) * v(5));
  const auto det = point_scheme_symbolic(Q);
  EXPECT_TRUE(det == expected || det == -expected) << det.to_string();
}

TEST(PointScheme, At123) {
  const std::vector<std::string> vars{"x", "y", "z"};
  using P = CommPoly<CyclotomicField>;
  auto v = [&](std::size_t i) { return P::variable(Q, vars, i); };
  const P expected = (v(0) * v(1) * v(2)).scaled(Q.from_int(36)) -
                     (v(0) * v(0) * v(0) + v(1) * v(1) * v(1) + v(2) * v(2) * v(2)).scaled(Q.from_int(6));
  EXPECT_EQ(point_scheme(triple(1, 2, 3)), expected);
}

TEST(PointScheme, ProjectivelyInvariant) {
  const auto p = triple(1, 2, 3);
  const auto s = Q.from_int(-5);
  EXPECT_EQ(point_scheme(p.scaled(s)), point_scheme(p).scaled(s * s * s));
  const CurveSpec<CyclotomicField> a(p), b(p.scaled(s));
  EXPECT_EQ(a.classification(), b.classification());
  EXPECT_EQ(sigma_order(p).order, sigma_order(p.scaled(s)).order);
}

TEST(Curve, OriginAlwaysOnCurve) {
  for (auto t : std::vector<std::array<long, 3>>{{1, 2, 3}, {1, 1, 5}, {0, 0, 1}, {1, 0, 0}, {1, 1, 1}, {4, -7, 2}})
    EXPECT_TRUE(CurveSpec<CyclotomicField>(triple(t[0], t[1], t[2])).contains(origin(Q)));
}

TEST(Curve, Classification) {
  EXPECT_EQ(CurveSpec<CyclotomicField>(triple(1, 2, 3)).classification(), CurveClass::smooth_cubic);
  EXPECT_EQ(CurveSpec<CyclotomicField>(triple(1, 0, 0)).classification(), CurveClass::singular_cubic);
  EXPECT_EQ(CurveSpec<CyclotomicField>(triple(1, 1, -2)).classification(), CurveClass::singular_cubic);
  const CyclotomicField K(3);
  const ParameterTriple<CyclotomicField> w(K, K.one(), K.zeta(1), K.zeta(2));
  EXPECT_EQ(CurveSpec<CyclotomicField>(w).classification(), CurveClass::singular_cubic);
  EXPECT_EQ(CurveSpec<CyclotomicField>(triple(1, -1, 0)).classification(), CurveClass::whole_plane);
}

TEST(Sigma, MapsCurveToCurve) {
  const auto p2 = triple(2, 3, 7);
  const CurveSpec<CyclotomicField> c2(p2);
  for (const auto& q : iterates(p2, 4)) {
    ASSERT_TRUE(c2.contains(q));
    const auto img = sigma_apply(p2, q);
    if (const auto* r = std::get_if<ProjPoint<CyclotomicField>>(&img)) {
      EXPECT_TRUE(c2.contains(*r));
    }
  }
}

TEST(Sigma, BasePointAtTranslationPoint) {
  for (long c : {2, 5, -3}) {
    const auto p = triple(1, 1, c);
    const CurveSpec<CyclotomicField> curve(p);
    const auto t = translation_point(p);
    EXPECT_TRUE(std::holds_alternative<BasePoint>(sigma_apply(p, t))) << c;
    EXPECT_EQ(sigma_step(p, curve, t, t), origin(Q));
    EXPECT_EQ(add_points(curve, t, t), origin(Q));
  }
}

TEST(GroupLaw, Axioms) {
  const auto p = triple(2, 3, 7);
  const CurveSpec<CyclotomicField> curve(p);
  const auto o = origin(Q);
  const auto pts = iterates(p, 3);
  EXPECT_EQ(chord_third(curve, o, o), o);
  for (const auto& u : pts) {
    EXPECT_EQ(add_points(curve, u, o), u);
    EXPECT_EQ(add_points(curve, u, negate(curve, u)), o);
    for (const auto& v : pts) {
      EXPECT_EQ(add_points(curve, u, v), add_points(curve, v, u));
      for (const auto& w : pts)
        EXPECT_EQ(add_points(curve, add_points(curve, u, v), w), add_points(curve, u, add_points(curve, v, w)));
    }
  }
  EXPECT_EQ(multiply(curve, pts[1], 3), pts[3]);
}

TEST(GroupLaw, TangentAtTranslationPoint) {
  const auto p = triple(1, 1, 5);
  const CurveSpec<CyclotomicField> curve(p);
  const auto t = translation_point(p);
  EXPECT_EQ(chord_third(curve, t, t), origin(Q));
}

TEST(SigmaOrder, ExactTable) {
  const CyclotomicField K3(3), K6(6);
  auto qrow = [](long a, long b, long c) { return sigma_order(triple(a, b, c)).order; };
  EXPECT_EQ(qrow(1, -1, 0), 1u);
  for (long c : {2, 5, -3}) EXPECT_EQ(qrow(1, 1, c), 2u) << c;
  EXPECT_EQ(qrow(1, 0, -1), 3u);
  EXPECT_EQ(sigma_order(ParameterTriple<CyclotomicField>(K6, K6.one(), K6.zero(), K6.zeta(1))).order, 3u);
  for (long v : {2, 5}) {
    EXPECT_EQ(sigma_order(ParameterTriple<CyclotomicField>(K3, K3.one(), K3.from_int(v), K3.zeta(1))).order, 6u) << v;
    EXPECT_EQ(sigma_order(ParameterTriple<CyclotomicField>(K3, K3.one(), K3.zeta(1), K3.from_int(v))).order, 6u) << v;
  }
  EXPECT_TRUE(sigma_order(triple(1, 2, 3)).exceeds_bound());
}

TEST(SigmaOrder, PathsAgree) {
  const CyclotomicField K3(3);
  std::vector<QTriple> rows{triple(1, 1, 2), triple(1, 1, 5), triple(1, 0, -1), triple(1, 2, 3),
                            QTriple(K3, K3.one(), K3.from_int(2), K3.zeta(1))};
  SigmaOrderOptions opt;
  opt.max_order = 12;
  for (const auto& p : rows) {
    if (!CurveSpec<CyclotomicField>(p).is_smooth()) continue;
    EXPECT_EQ(sigma_order(p, opt).order, sigma_order_by_iteration(p, opt).order) << p.a().to_string() << p.b().to_string()
                                                                                << p.c().to_string();
  }
}

TEST(SigmaOrder, TranslationConsistency) {
  const CyclotomicField K3(3);
  for (const auto& p : {triple(1, 1, 5), QTriple(K3, K3.one(), K3.from_int(2), K3.zeta(1))}) {
    const CurveSpec<CyclotomicField> curve(p);
    const auto t = translation_point(p);
    const auto pts = iterates(p, 12);
    for (unsigned k = 0; k < 12; ++k) {
      EXPECT_EQ(sigma_step(p, curve, t, pts[k]), pts[k + 1]) << k;
      const auto img = sigma_apply(p, pts[k]);
      if (const auto* q = std::get_if<ProjPoint<CyclotomicField>>(&img)) {
        EXPECT_EQ(*q, pts[k + 1]) << k;
      }
    }
  }
}

TEST(SigmaOrder, FloatingOrderFour) {
  const ComplexField C(1e-9);
  const auto start = std::chrono::steady_clock::now();
  const double c = std::cbrt(10.0 / 3.0);
  for (int k = 0; k < 3; ++k) {
    const CTriple p(C, 1.0, 2.0, c * C.zeta(k, 3));
    const auto r = sigma_order(p);
    EXPECT_EQ(r.order, 4u) << k;
    EXPECT_LT(r.residual, 1e-8);
  }
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 5.0);
}

TEST(SigmaOrder, FloatingOrderFive) {
  const ComplexField C(1e-9);
  const std::complex<double> c = 2.0, c3 = c * c * c;
  // Z^6 + (c^3-1)Z^5 + (1-c^3)Z^4 + (-1-c^3)Z^3 + (1-c^3)Z^2 + (c^6-c^3)Z + c^3
  const auto roots = polynomial_roots({c3, c3 * c3 - c3, 1.0 - c3, -1.0 - c3, 1.0 - c3, c3 - 1.0});
  int checked = 0;
  for (const auto& b : roots) {
    if (std::abs(b) < 1e-6 || std::abs(b * b * b - 1.0) < 1e-6) continue;
    const auto r = sigma_order(CTriple(C, 1.0, b, c));
    EXPECT_EQ(r.order, 5u) << b;
    EXPECT_LT(r.residual, 1e-8);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(SigmaOrder, DegenerateCurves) {
  EXPECT_EQ(sigma_order(triple(1, 1, 1)).order, 2u);
  EXPECT_THROW(sigma_order(triple(0, 0, 1)), Error);
}

TEST(Classify, PredictedBounds) {
  const auto r = classify_params(triple(1, 1, 5));
  EXPECT_EQ(r.pi_degree, 2u);
  ASSERT_TRUE(r.bounds);
  EXPECT_EQ(r.bounds->torsionfree_min, 2u);
  EXPECT_EQ(r.bounds->torsionfree_max, 2u);
  const auto s = classify_params(triple(1, -1, -1));
  EXPECT_EQ(s.pi_degree, 6u);
  EXPECT_EQ(s.bounds->torsionfree_min, 2u);
  EXPECT_EQ(s.bounds->torsionfree_max, 6u);
  const auto d = classify_params(triple(1, 1, 1));
  EXPECT_TRUE(d.in_degenerate_set_D);
  EXPECT_FALSE(d.pi_degree);
}
