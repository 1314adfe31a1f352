#pragma once

// Point scheme of S(a,b,c): the plane cubic lambda*xyz - mu*(x^3+y^3+z^3),
// the shift automorphism sigma, the chord-tangent group law with origin
// [1:-1:0], and the order of sigma.

#include "skly3/commpoly.hpp"
#include "skly3/error.hpp"
#include "skly3/field.hpp"
#include "skly3/ncpoly.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace skly3 {

enum class CurveClass { smooth_cubic, singular_cubic, whole_plane };

inline const char* to_string(CurveClass c) {
  switch (c) {
  case CurveClass::smooth_cubic: return "smooth_cubic";
  case CurveClass::singular_cubic: return "singular_cubic";
  case CurveClass::whole_plane: return "whole_plane";
  }
  return "?";
}

/// Rows of linear forms m_kl with relation_k = sum_l m_kl(x,y,z) * x_l'.
/// Generic over any commutative ring type so it also runs symbolically.
template <class Ring>
std::array<std::array<Ring, 3>, 3> multilinearization_matrix(const Ring& a, const Ring& b, const Ring& c,
                                                             const Ring& x, const Ring& y, const Ring& z) {
  return {{{c * x, b * z, a * y}, {a * z, c * y, b * x}, {b * y, a * x, c * z}}};
}

template <class Ring>
Ring det3(const std::array<std::array<Ring, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Determinant of the multilinearization, a cubic form in x, y, z.
template <Field F>
CommPoly<F> point_scheme(const ParameterTriple<F>& p) {
  const F& f = p.field();
  const std::vector<std::string> vars{"x", "y", "z"};
  using P = CommPoly<F>;
  const P a = P::constant(f, vars, p.a()), b = P::constant(f, vars, p.b()), c = P::constant(f, vars, p.c());
  return det3(multilinearization_matrix(a, b, c, P::variable(f, vars, 0), P::variable(f, vars, 1),
                                        P::variable(f, vars, 2)));
}

/// The same determinant with a, b, c kept as indeterminates.
template <Field F>
CommPoly<F> point_scheme_symbolic(const F& f) {
  const std::vector<std::string> vars{"a", "b", "c", "x", "y", "z"};
  using P = CommPoly<F>;
  auto v = [&](std::size_t i) { return P::variable(f, vars, i); };
  return det3(multilinearization_matrix(v(0), v(1), v(2), v(3), v(4), v(5)));
}

template <Field F>
class ProjPoint {
public:
  using Element = typename F::Element;

  ProjPoint(const F& field, Element x, Element y, Element z) : field_(field), c_{std::move(x), std::move(y), std::move(z)} {
    normalize();
  }

  static ProjPoint of_ints(const F& field, long x, long y, long z) {
    return ProjPoint(field, field.from_int(x), field.from_int(y), field.from_int(z));
  }

  const F& field() const { return field_; }
  const Element& operator[](std::size_t i) const { return c_[i]; }
  const std::array<Element, 3>& coords() const { return c_; }

  /// sin of the angle between representatives; 0 iff equal points.
  double distance(const ProjPoint& o) const {
    std::array<std::complex<double>, 3> u, v;
    for (int i = 0; i < 3; ++i) {
      u[i] = field_.embed(c_[i]);
      v[i] = field_.embed(o.c_[i]);
    }
    double nu = 0, nv = 0, wedge = 0;
    for (int i = 0; i < 3; ++i) {
      nu += std::norm(u[i]);
      nv += std::norm(v[i]);
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) wedge += std::norm(u[i] * v[j] - u[j] * v[i]);
    return std::sqrt(wedge / (nu * nv));
  }

  friend bool operator==(const ProjPoint& p, const ProjPoint& q) {
    if constexpr (F::is_exact) {
      return p.c_[0] == q.c_[0] && p.c_[1] == q.c_[1] && p.c_[2] == q.c_[2];
    } else {
      return p.distance(q) <= p.field_.tolerance();
    }
  }

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < 3; ++i) {
      if (i) s += " : ";
      if constexpr (F::is_exact)
        s += c_[i].to_string();
      else
        s += format_scalar(Scalar(c_[i]));
    }
    return s + "]";
  }

private:
  void normalize() {
    if constexpr (F::is_exact) {
      for (int i = 0; i < 3; ++i) {
        if (field_.is_zero(c_[i])) continue;
        const Element inv = field_.one() / c_[i];
        for (auto& e : c_) e = e * inv;
        return;
      }
      throw PreconditionError("[0:0:0] is not a projective point");
    } else {
      // complex: divide by the largest coordinate for stability
      int best = 0;
      for (int i = 1; i < 3; ++i)
        if (std::abs(c_[i]) > std::abs(c_[best])) best = i;
      if (std::abs(c_[best]) == 0.0 || !std::isfinite(std::abs(c_[best])))
        throw PreconditionError("degenerate projective point");
      const Element inv = 1.0 / c_[best];
      for (auto& e : c_) e *= inv;
      c_[best] = 1.0;
    }
  }

  F field_;
  std::array<Element, 3> c_;
};

struct BasePoint {};

template <Field F>
using SigmaImage = std::variant<ProjPoint<F>, BasePoint>;

/// E: lambda*xyz - mu*(x^3+y^3+z^3) with lambda = a^3+b^3+c^3, mu = abc.
template <Field F>
class CurveSpec {
public:
  using Element = typename F::Element;
  using Point = ProjPoint<F>;

  explicit CurveSpec(const ParameterTriple<F>& p)
      : field_(p.field()), lambda_(p.a() * p.a() * p.a() + p.b() * p.b() * p.b() + p.c() * p.c() * p.c()),
        mu_(p.a() * p.b() * p.c()) {
    if (field_.is_zero(lambda_) && field_.is_zero(mu_)) {
      class_ = CurveClass::whole_plane;
    } else {
      const Element three_mu = field_.from_int(3) * mu_;
      const bool smooth =
          !field_.is_zero(mu_) && !field_.equal(three_mu * three_mu * three_mu, lambda_ * lambda_ * lambda_);
      class_ = smooth ? CurveClass::smooth_cubic : CurveClass::singular_cubic;
    }
  }

  const F& field() const { return field_; }
  const Element& lambda() const { return lambda_; }
  const Element& mu() const { return mu_; }
  CurveClass classification() const { return class_; }
  bool is_smooth() const { return class_ == CurveClass::smooth_cubic; }

  CommPoly<F> cubic_form() const {
    const std::vector<std::string> vars{"x", "y", "z"};
    CommPoly<F> f(field_, vars);
    f.add_term({1, 1, 1}, lambda_);
    f.add_term({3, 0, 0}, -mu_);
    f.add_term({0, 3, 0}, -mu_);
    f.add_term({0, 0, 3}, -mu_);
    return f;
  }

  Element value(const std::array<Element, 3>& p) const {
    return lambda_ * p[0] * p[1] * p[2] - mu_ * (p[0] * p[0] * p[0] + p[1] * p[1] * p[1] + p[2] * p[2] * p[2]);
  }

  std::array<Element, 3> gradient(const std::array<Element, 3>& p) const {
    const Element three_mu = field_.from_int(3) * mu_;
    return {lambda_ * p[1] * p[2] - three_mu * p[0] * p[0], lambda_ * p[0] * p[2] - three_mu * p[1] * p[1],
            lambda_ * p[0] * p[1] - three_mu * p[2] * p[2]};
  }

  bool contains(const Point& p) const {
    const Element v = value(p.coords());
    if constexpr (F::is_exact) {
      return field_.is_zero(v);
    } else {
      const double scale = std::max({1.0, std::abs(lambda_), std::abs(mu_)});
      return std::abs(v) <= 1e3 * field_.tolerance() * scale;
    }
  }

  /// Coefficient of s^2 t in F(s*u + t*v).
  Element polar(const std::array<Element, 3>& u, const std::array<Element, 3>& v) const {
    return lambda_ * (u[0] * u[1] * v[2] + u[0] * v[1] * u[2] + v[0] * u[1] * u[2]) -
           field_.from_int(3) * mu_ * (u[0] * u[0] * v[0] + u[1] * u[1] * v[1] + u[2] * u[2] * v[2]);
  }

private:
  F field_;
  Element lambda_, mu_;
  CurveClass class_;
};

/// The inflection point [1:-1:0], origin of the group law.
template <Field F>
ProjPoint<F> origin(const F& field) {
  return ProjPoint<F>::of_ints(field, 1, -1, 0);
}

namespace detail {

template <Field F>
bool negligible_vector(const F& field, const std::array<typename F::Element, 3>& v, double scale) {
  if constexpr (F::is_exact) {
    (void)scale;
    return field.is_zero(v[0]) && field.is_zero(v[1]) && field.is_zero(v[2]);
  } else {
    return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])}) <= field.tolerance() * scale;
  }
}

template <Field F>
double coord_scale(const ProjPoint<F>& p) {
  const auto& f = p.field();
  return std::max({f.magnitude(p[0]), f.magnitude(p[1]), f.magnitude(p[2])});
}

} // namespace detail

/// sigma([x:y:z]) = [acy^2 - b^2xz : bcx^2 - a^2yz : abz^2 - c^2xy], or the
/// BasePoint outcome when all three quadrics vanish.
template <Field F>
SigmaImage<F> sigma_apply(const ParameterTriple<F>& params, const ProjPoint<F>& p) {
  const auto &a = params.a(), &b = params.b(), &c = params.c();
  const auto &x = p[0], &y = p[1], &z = p[2];
  std::array<typename F::Element, 3> img{a * c * y * y - b * b * x * z, b * c * x * x - a * a * y * z,
                                         a * b * z * z - c * c * x * y};
  const F& f = params.field();
  const double pscale = std::max({f.magnitude(a), f.magnitude(b), f.magnitude(c)});
  const double s = detail::coord_scale(p);
  if (detail::negligible_vector(f, img, pscale * pscale * s * s)) return BasePoint{};
  return ProjPoint<F>(f, img[0], img[1], img[2]);
}

/// Third intersection of the line pq (the tangent at p when p == q) with E.
template <Field F>
ProjPoint<F> chord_third(const CurveSpec<F>& curve, const ProjPoint<F>& p, const ProjPoint<F>& q) {
  if (!curve.is_smooth()) throw PreconditionError("group law needs a smooth cubic");
  if (!curve.contains(p)) throw PreconditionError("point " + p.to_string() + " is not on the curve");
  if (!curve.contains(q)) throw PreconditionError("point " + q.to_string() + " is not on the curve");
  const F& f = curve.field();
  using E = typename F::Element;
  auto combine = [&](const E& s, const ProjPoint<F>& u, const E& t, const std::array<E, 3>& v) {
    return ProjPoint<F>(f, s * u[0] + t * v[0], s * u[1] + t * v[1], s * u[2] + t * v[2]);
  };
  if (p == q) {
    const auto g = curve.gradient(p.coords());
    if (detail::negligible_vector(f, g, std::max(1.0, f.magnitude(curve.lambda())) * 10))
      throw PreconditionError("singular point " + p.to_string());
    // a second point r on the tangent line g . X = 0
    std::optional<std::array<E, 3>> r;
    double best = -1.0;
    for (int k = 0; k < 3; ++k) {
      std::array<E, 3> e{f.zero(), f.zero(), f.zero()};
      e[k] = f.one();
      std::array<E, 3> cand{g[1] * e[2] - g[2] * e[1], g[2] * e[0] - g[0] * e[2], g[0] * e[1] - g[1] * e[0]};
      if (detail::negligible_vector(f, cand, 1.0)) continue;
      const ProjPoint<F> cp(f, cand[0], cand[1], cand[2]);
      const double dist = cp.distance(p);
      if constexpr (F::is_exact) {
        if (cp == p) continue;
        r = cand;
        break;
      } else {
        if (dist > best) {
          best = dist;
          r = cand;
        }
      }
    }
    if (!r) throw Error("no tangent direction found at " + p.to_string());
    const E c = curve.polar(*r, p.coords());
    const E d = curve.value(*r);
    return combine(d, p, -c, *r);
  }
  const E b = curve.polar(p.coords(), q.coords());
  const E c = curve.polar(q.coords(), p.coords());
  if (f.is_zero(b) && f.is_zero(c)) throw Error("line through " + p.to_string() + " and " + q.to_string() + " lies on the curve");
  return combine(c, p, -b, q.coords());
}

/// p + q := third(o, third(p, q)).
template <Field F>
ProjPoint<F> add_points(const CurveSpec<F>& curve, const ProjPoint<F>& p, const ProjPoint<F>& q) {
  return chord_third(curve, origin(curve.field()), chord_third(curve, p, q));
}

template <Field F>
ProjPoint<F> negate(const CurveSpec<F>& curve, const ProjPoint<F>& p) {
  return chord_third(curve, p, origin(curve.field()));
}

template <Field F>
ProjPoint<F> multiply(const CurveSpec<F>& curve, const ProjPoint<F>& p, unsigned n) {
  ProjPoint<F> acc = origin(curve.field());
  for (unsigned i = 0; i < n; ++i) acc = add_points(curve, acc, p);
  return acc;
}

/// The translation point t = sigma(o) of a smooth triple.
template <Field F>
ProjPoint<F> translation_point(const ParameterTriple<F>& params) {
  auto img = sigma_apply(params, origin(params.field()));
  if (auto* p = std::get_if<ProjPoint<F>>(&img)) return *p;
  throw Error("sigma is not defined at the origin for these parameters");
}

/// sigma(p) by the quadrics, falling back to p + t when p is a base point.
template <Field F>
ProjPoint<F> sigma_step(const ParameterTriple<F>& params, const CurveSpec<F>& curve, const ProjPoint<F>& t,
                        const ProjPoint<F>& p) {
  auto img = sigma_apply(params, p);
  if (auto* q = std::get_if<ProjPoint<F>>(&img)) return *q;
  return add_points(curve, p, t);
}

struct SigmaOrderOptions {
  unsigned max_order = 200;
  /// projective distance accepted as "equal" on the complex path
  double match_tolerance = 1e-8;
  std::uint32_t seed = 20110601;
  unsigned samples = 3;
  unsigned resample_budget = 20;
  int sample_range = 10;
};

struct SigmaOrder {
  std::optional<unsigned> order;
  unsigned max_order = 0;
  std::string method;
  /// projective distance of |sigma| * t from o (complex path), else 0
  double residual = 0.0;

  bool exceeds_bound() const { return !order.has_value(); }
};

namespace detail {

/// sigma on complex coordinates; nullopt at a base point.
inline std::optional<std::array<std::complex<double>, 3>>
sigma_complex(const std::array<std::complex<double>, 3>& abc, const std::array<std::complex<double>, 3>& p) {
  const auto &a = abc[0], &b = abc[1], &c = abc[2];
  const auto &x = p[0], &y = p[1], &z = p[2];
  std::array<std::complex<double>, 3> img{a * c * y * y - b * b * x * z, b * c * x * x - a * a * y * z,
                                          a * b * z * z - c * c * x * y};
  double m = std::max({std::abs(img[0]), std::abs(img[1]), std::abs(img[2])});
  double s = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (!(m > 1e-12 * s * s) || !std::isfinite(m)) return std::nullopt;
  for (auto& e : img) e /= m;
  return img;
}

inline double complex_distance(const std::array<std::complex<double>, 3>& u,
                               const std::array<std::complex<double>, 3>& v) {
  double nu = 0, nv = 0, wedge = 0;
  for (int i = 0; i < 3; ++i) {
    nu += std::norm(u[i]);
    nv += std::norm(v[i]);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) wedge += std::norm(u[i] * v[j] - u[j] * v[i]);
  return std::sqrt(wedge / (nu * nv));
}

} // namespace detail

namespace detail {

template <Field F>
ParameterTriple<ComplexField> embed_params(const ParameterTriple<F>& p, double tolerance) {
  const F& f = p.field();
  return ParameterTriple<ComplexField>(ComplexField(tolerance), f.embed(p.a()), f.embed(p.b()), f.embed(p.c()));
}

/// Orders n <= max_order at which the floating translation orbit returns
/// near o; nullopt when the floating group law breaks down.
template <Field F>
std::optional<std::vector<unsigned>> translation_order_candidates(const ParameterTriple<F>& params,
                                                                  unsigned max_order) {
  try {
    const auto cp = embed_params(params, 1e-7);
    const CurveSpec<ComplexField> curve(cp);
    if (!curve.is_smooth()) return std::nullopt;
    const auto o = origin(cp.field());
    const auto t = translation_point(cp);
    std::vector<unsigned> out;
    auto acc = t;
    for (unsigned n = 1; n <= max_order; ++n) {
      if (acc.distance(o) < 1e-4) out.push_back(n);
      if (n < max_order) acc = add_points(curve, acc, t);
    }
    return out;
  } catch (const Error&) {
    return std::nullopt;
  }
}

} // namespace detail

/// Least n <= max_order with sigma^n = id.  Smooth curves use the order of the
/// translation point under the group law; singular curves and the whole plane
/// iterate sigma on sample points with nonzero coordinates.
template <Field F>
SigmaOrder sigma_order(const ParameterTriple<F>& params, const SigmaOrderOptions& opt = {}) {
  if (opt.max_order < 1) throw PreconditionError("max_order must be at least 1");
  const F& f = params.field();
  const CurveSpec<F> curve(params);
  SigmaOrder out;
  out.max_order = opt.max_order;

  if (curve.is_smooth()) {
    out.method = "translation";
    const ProjPoint<F> o = origin(f);
    const ProjPoint<F> t = translation_point(params);
    if constexpr (F::is_exact) {
      // exact heights grow quickly along a non-torsion orbit: a floating pass
      // proposes candidate orders and each candidate is checked exactly
      if (auto candidates = detail::translation_order_candidates(params, opt.max_order)) {
        for (unsigned n : *candidates)
          if (multiply(curve, t, n) == o) {
            out.order = n;
            return out;
          }
        return out;
      }
    }
    ProjPoint<F> acc = t;
    for (unsigned n = 1; n <= opt.max_order; ++n) {
      if constexpr (F::is_exact) {
        if (acc == o) {
          out.order = n;
          return out;
        }
      } else {
        const double dist = acc.distance(o);
        if (dist <= opt.match_tolerance) {
          out.order = n;
          out.residual = dist;
          return out;
        }
      }
      if (n < opt.max_order) acc = add_points(curve, acc, t);
    }
    return out;
  }

  out.method = "iteration";
  const std::array<std::complex<double>, 3> abc{f.embed(params.a()), f.embed(params.b()), f.embed(params.c())};
  std::mt19937 rng(opt.seed);
  std::uniform_int_distribution<int> coord(-opt.sample_range, opt.sample_range - 1);
  auto draw = [&] {
    int v = coord(rng);
    return v >= 0 ? v + 1 : v; // skip 0
  };
  unsigned resamples = 0;
  unsigned long combined = 1;
  double worst = 0.0;
  for (unsigned sample = 0; sample < opt.samples;) {
    const ProjPoint<F> start = ProjPoint<F>::of_ints(f, draw(), draw(), draw());
    std::array<std::complex<double>, 3> fstart{f.embed(start[0]), f.embed(start[1]), f.embed(start[2])};
    // floating pass proposes candidate periods; exact fields confirm them exactly
    std::vector<std::pair<unsigned, double>> candidates;
    bool base_hit = false;
    auto cur = fstart;
    for (unsigned k = 1; k <= opt.max_order; ++k) {
      auto next = detail::sigma_complex(abc, cur);
      if (!next) {
        base_hit = true;
        break;
      }
      cur = *next;
      const double dist = detail::complex_distance(cur, fstart);
      if (dist <= (F::is_exact ? 1e-6 : opt.match_tolerance)) candidates.emplace_back(k, dist);
    }
    std::optional<unsigned> period;
    if (!base_hit) {
      if constexpr (F::is_exact) {
        for (auto [k, dist] : candidates) {
          ProjPoint<F> p = start;
          bool hit_base = false;
          for (unsigned i = 0; i < k; ++i) {
            auto img = sigma_apply(params, p);
            if (std::holds_alternative<BasePoint>(img)) {
              hit_base = true;
              break;
            }
            p = std::get<ProjPoint<F>>(img);
          }
          if (hit_base) {
            base_hit = true;
            break;
          }
          if (p == start) {
            period = k;
            break;
          }
        }
      } else {
        if (!candidates.empty()) {
          period = candidates.front().first;
          worst = std::max(worst, candidates.front().second);
        }
      }
    }
    if (base_hit) {
      if (++resamples > opt.resample_budget)
        throw Error("sigma keeps hitting base points; resample budget exhausted");
      continue;
    }
    if (!period) return out;
    combined = std::lcm(combined, static_cast<unsigned long>(*period));
    if (combined > opt.max_order) return out;
    ++sample;
  }
  out.order = static_cast<unsigned>(combined);
  out.residual = worst;
  return out;
}

/// Order of sigma found by applying the quadrics to the orbit of o directly
/// (with the group-law fallback at base points); smooth triples only.
template <Field F>
SigmaOrder sigma_order_by_iteration(const ParameterTriple<F>& params, const SigmaOrderOptions& opt = {}) {
  const CurveSpec<F> curve(params);
  if (!curve.is_smooth()) throw PreconditionError("direct orbit iteration needs a smooth cubic");
  SigmaOrder out;
  out.max_order = opt.max_order;
  out.method = "orbit_iteration";
  const ProjPoint<F> o = origin(params.field());
  const ProjPoint<F> t = translation_point(params);
  ProjPoint<F> p = o;
  for (unsigned n = 1; n <= opt.max_order; ++n) {
    p = sigma_step(params, curve, t, p);
    const double dist = p.distance(o);
    const bool back = F::is_exact ? p == o : dist <= opt.match_tolerance;
    if (back) {
      out.order = n;
      out.residual = F::is_exact ? 0.0 : dist;
      return out;
    }
  }
  return out;
}

/// Dimension predictions for a triple of finite order n = |sigma|.
struct DimensionBounds {
  unsigned torsionfree_min = 0;
  unsigned torsionfree_max = 0;
  unsigned torsion = 0;
};

inline DimensionBounds dimension_bounds(unsigned order) {
  DimensionBounds b;
  b.torsionfree_max = order;
  b.torsionfree_min = order % 3 == 0 ? order / 3 : order;
  b.torsion = order;
  return b;
}

template <Field F>
struct Classification {
  bool in_degenerate_set_D = false;
  bool satisfies_condition_2 = false;
  CurveClass curve = CurveClass::whole_plane;
  typename F::Element lambda;
  typename F::Element mu;
  SigmaOrder sigma;
  std::optional<unsigned> pi_degree;
  std::optional<DimensionBounds> bounds;

  bool is_sklyanin() const { return !in_degenerate_set_D && satisfies_condition_2; }
};

template <Field F>
Classification<F> classify_params(const ParameterTriple<F>& params, const SigmaOrderOptions& opt = {}) {
  const CurveSpec<F> curve(params);
  Classification<F> out{params.in_degenerate_set_D(), params.satisfies_condition_2(), curve.classification(),
                        curve.lambda(),                curve.mu(),                      sigma_order(params, opt),
                        std::nullopt,                  std::nullopt};
  if (out.sigma.order && out.is_sklyanin() && curve.is_smooth()) {
    out.pi_degree = *out.sigma.order;
    out.bounds = dimension_bounds(*out.sigma.order);
  }
  return out;
}

} // namespace skly3
