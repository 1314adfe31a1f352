#pragma once

// Finite-dimensional representations of S(a,b,c): verification, Burnside
// irreducibility, the action of g, the 1-dimensional solution set and the
// explicit families.

#include "skly3/error.hpp"
#include "skly3/field.hpp"
#include "skly3/matrix.hpp"
#include "skly3/ncpoly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace skly3 {

/// exp(2 pi i k / n) in the field; exact fields need n | m.
inline Cyclotomic root_of_unity(const CyclotomicField& f, int n, long k) {
  if (n <= 0 || f.order() % n != 0)
    throw FieldMismatch("a primitive " + std::to_string(n) + "-th root of unity is not in " + f.name());
  return f.zeta(k * (f.order() / n));
}

inline std::complex<double> root_of_unity(const ComplexField& f, int n, long k) { return f.zeta(k, n); }

struct Residual {
  double value = 0.0;
  /// every relation evaluates to the exact zero matrix (exact fields only)
  bool exact_zero = false;

  bool satisfies(double tolerance) const { return exact_zero || value <= tolerance; }
};

/// Max-entry norm of the three relations evaluated on rep.
template <Field F>
Residual verify_rep(const ParameterTriple<F>& params, const MatRep<F>& rep) {
  Residual r;
  r.exact_zero = F::is_exact;
  for (const auto& rel : sklyanin_relations(params)) {
    const Matrix<F> m = evaluate(rel, rep);
    r.value = std::max(r.value, m.max_abs());
    if constexpr (F::is_exact) r.exact_zero = r.exact_zero && m.is_zero();
  }
  return r;
}

namespace detail {

/// Incrementally maintained basis of a span of vectors.  Exact fields keep a
/// reduced echelon form; complex vectors are orthonormalized and a candidate
/// counts as new when its residual exceeds rel_tol times the largest norm
/// offered so far.
template <Field F>
class SpanBasis {
public:
  using Element = typename F::Element;
  using Vec = std::vector<Element>;

  SpanBasis(F field, std::size_t dim, double rel_tol = 1e-7) : field_(std::move(field)), dim_(dim), tol_(rel_tol) {}

  std::size_t rank() const { return rows_.size(); }

  /// Adds v if independent; returns whether it was.
  bool add(Vec v) {
    if constexpr (F::is_exact) {
      for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Element coef = v[pivots_[k]];
        if (field_.is_zero(coef)) continue;
        for (std::size_t j = 0; j < dim_; ++j) v[j] = v[j] - coef * rows_[k][j];
      }
      std::size_t piv = dim_;
      for (std::size_t j = 0; j < dim_; ++j)
        if (!field_.is_zero(v[j])) {
          piv = j;
          break;
        }
      if (piv == dim_) return false;
      const Element inv = field_.one() / v[piv];
      for (auto& e : v) e = e * inv;
      for (auto& row : rows_) {
        const Element coef = row[piv];
        if (field_.is_zero(coef)) continue;
        for (std::size_t j = 0; j < dim_; ++j) row[j] = row[j] - coef * v[j];
      }
      rows_.push_back(std::move(v));
      pivots_.push_back(piv);
      return true;
    } else {
      scale_ = std::max(scale_, norm(v));
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& q : rows_) {
          Element dot = 0.0;
          for (std::size_t j = 0; j < dim_; ++j) dot += std::conj(q[j]) * v[j];
          for (std::size_t j = 0; j < dim_; ++j) v[j] -= dot * q[j];
        }
      const double n = norm(v);
      if (!(n > tol_ * scale_)) return false;
      for (auto& e : v) e /= n;
      rows_.push_back(std::move(v));
      return true;
    }
  }

  const std::vector<Vec>& rows() const { return rows_; }

private:
  static double norm(const Vec& v) {
    double s = 0.0;
    for (const auto& e : v) s += std::norm(e);
    return std::sqrt(s);
  }

  F field_;
  std::size_t dim_;
  double tol_;
  double scale_ = 0.0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

template <Field F>
std::vector<typename F::Element> flatten(const Matrix<F>& m) {
  return m.data();
}

template <Field F>
Matrix<F> unflatten(const F& field, const std::vector<typename F::Element>& v, std::size_t d) {
  Matrix<F> m(field, d, d);
  for (std::size_t i = 0; i < d * d; ++i) m(i / d, i % d) = v[i];
  return m;
}

/// Null space of the rows (as column vectors of length n).
template <Field F>
std::vector<std::vector<typename F::Element>> null_space(const F& field,
                                                         const std::vector<std::vector<typename F::Element>>& rows,
                                                         std::size_t n) {
  using Element = typename F::Element;
  std::vector<std::vector<Element>> m = rows;
  double scale = 0.0;
  for (const auto& r : m)
    for (const auto& e : r) scale = std::max(scale, field.magnitude(e));
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m.size(); ++col) {
    std::size_t best = m.size();
    double best_mag = 0.0;
    for (std::size_t i = r; i < m.size(); ++i) {
      const double mag = field.magnitude(m[i][col]);
      const bool nonzero = F::is_exact ? !field.is_zero(m[i][col]) : mag > 1e-7 * scale;
      if (nonzero && (best == m.size() || mag > best_mag)) {
        best = i;
        best_mag = mag;
        if (F::is_exact) break;
      }
    }
    if (best == m.size()) continue;
    std::swap(m[r], m[best]);
    const Element inv = field.one() / m[r][col];
    for (auto& e : m[r]) e = e * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      const Element f = m[i][col];
      if (field.is_zero(f)) continue;
      for (std::size_t j = 0; j < n; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  std::vector<std::vector<Element>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<Element> v(n, field.zero());
    v[free] = field.one();
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -m[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Field F>
typename F::Element trace(const Matrix<F>& m) {
  auto t = m.field().zero();
  for (std::size_t i = 0; i < m.rows(); ++i) t = t + m(i, i);
  return t;
}

/// Basis of span{A v : A in basis, v in seeds} when it is a proper nonzero subspace.
template <Field F>
std::optional<std::vector<std::vector<typename F::Element>>>
proper_orbit(const std::vector<Matrix<F>>& basis, const std::vector<std::vector<typename F::Element>>& seeds,
             double rel_tol) {
  const F& field = basis.front().field();
  const std::size_t d = basis.front().rows();
  SpanBasis<F> orbit(field, d, rel_tol);
  std::vector<std::vector<typename F::Element>> vecs;
  for (const auto& v : seeds)
    for (const auto& m : basis) {
      std::vector<typename F::Element> w(d, field.zero());
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) w[i] = w[i] + m(i, j) * v[j];
      if (orbit.add(w)) vecs.push_back(std::move(w));
    }
  if (orbit.rank() == 0 || orbit.rank() == d) return std::nullopt;
  return vecs;
}

/// Basis of {T : T g = g T for every generator}.
template <Field F>
std::vector<Matrix<F>> commutant(const std::vector<Matrix<F>>& generators) {
  const F& field = generators.front().field();
  const std::size_t d = generators.front().rows();
  std::vector<std::vector<typename F::Element>> eqs;
  for (const auto& g : generators)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        // (T g - g T)_{ij} as a linear form in the entries of T
        std::vector<typename F::Element> row(d * d, field.zero());
        for (std::size_t k = 0; k < d; ++k) {
          row[i * d + k] = row[i * d + k] + g(k, j);
          row[k * d + j] = row[k * d + j] - g(i, k);
        }
        eqs.push_back(std::move(row));
      }
  std::vector<Matrix<F>> out;
  for (const auto& v : null_space(field, eqs, d * d)) out.push_back(unflatten(field, v, d));
  return out;
}

} // namespace detail

template <Field F>
struct IrreducibilityReport {
  bool irreducible = false;
  /// dimension of the algebra generated by the matrices
  std::size_t closure_dimension = 0;
  /// spanning vectors of a proper invariant subspace when one was located
  std::optional<std::vector<std::vector<typename F::Element>>> witness;
};

/// Burnside: span closure of {I} under left multiplication by the generators;
/// irreducible iff it fills Mat_d.
template <Field F>
IrreducibilityReport<F> irreducibility(const std::vector<Matrix<F>>& generators, double rel_tol = 1e-7) {
  if (generators.empty()) throw PreconditionError("no generators");
  const F& field = generators.front().field();
  const std::size_t d = generators.front().rows();
  detail::SpanBasis<F> span(field, d * d, rel_tol);
  std::vector<Matrix<F>> basis;
  std::vector<Matrix<F>> queue{Matrix<F>::identity(field, d)};
  while (!queue.empty()) {
    Matrix<F> m = std::move(queue.back());
    queue.pop_back();
    if (!span.add(detail::flatten(m))) continue;
    for (const auto& g : generators) queue.push_back(g * m);
    basis.push_back(std::move(m));
    if (span.rank() == d * d) break;
  }
  IrreducibilityReport<F> out;
  out.closure_dimension = span.rank();
  out.irreducible = out.closure_dimension == d * d;
  if (out.irreducible) return out;

  // A v for a basis vector v, or the annihilator of A^T w
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<typename F::Element> e(d, field.zero());
    e[i] = field.one();
    if (auto w = detail::proper_orbit(basis, {e}, rel_tol)) {
      out.witness = std::move(w);
      return out;
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::vector<typename F::Element>> rows;
    detail::SpanBasis<F> orbit(field, d, rel_tol);
    for (const auto& m : basis) {
      std::vector<typename F::Element> row(d);
      for (std::size_t c = 0; c < d; ++c) row[c] = m(i, c);
      if (orbit.add(row)) rows.push_back(row);
    }
    if (orbit.rank() < d) {
      out.witness = detail::null_space(field, rows, d);
      return out;
    }
  }
  // radical = kernel of the trace form (characteristic 0); J V is invariant
  const std::size_t k = basis.size();
  std::vector<std::vector<typename F::Element>> gram(k, std::vector<typename F::Element>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = detail::trace(basis[i] * basis[j]);
  for (const auto& coeffs : detail::null_space(field, gram, k)) {
    Matrix<F> r(field, d, d);
    for (std::size_t i = 0; i < k; ++i) r += basis[i].scaled(coeffs[i]);
    std::vector<std::vector<typename F::Element>> cols;
    for (std::size_t c = 0; c < d; ++c) {
      std::vector<typename F::Element> col(d);
      for (std::size_t i = 0; i < d; ++i) col[i] = r(i, c);
      cols.push_back(col);
    }
    if (auto w = detail::proper_orbit(basis, cols, rel_tol)) {
      out.witness = std::move(w);
      return out;
    }
  }
  // semisimple: kernels of singular commutant elements
  for (const auto& t : detail::commutant(generators)) {
    std::vector<typename F::Element> shifts{field.zero()};
    for (std::size_t i = 0; i < d; ++i) shifts.push_back(t(i, i));
    for (const auto& shift : shifts) {
      std::vector<std::vector<typename F::Element>> rows;
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<typename F::Element> row(d);
        for (std::size_t c = 0; c < d; ++c) row[c] = t(i, c) - (i == c ? shift : field.zero());
        rows.push_back(row);
      }
      const auto ker = detail::null_space(field, rows, d);
      if (ker.empty()) continue;
      if (auto w = detail::proper_orbit(basis, ker, rel_tol)) {
        out.witness = std::move(w);
        return out;
      }
    }
  }
  return out;
}

template <Field F>
IrreducibilityReport<F> irreducibility(const MatRep<F>& rep, double rel_tol = 1e-7) {
  return irreducibility(std::vector<Matrix<F>>{rep.X, rep.Y, rep.Z}, rel_tol);
}

template <Field F>
bool irreducible(const MatRep<F>& rep, double rel_tol = 1e-7) {
  return irreducibility(rep, rel_tol).irreducible;
}

/// Checks that span(vectors) is stable under every generator.
template <Field F>
bool is_invariant_subspace(const std::vector<Matrix<F>>& generators,
                           const std::vector<std::vector<typename F::Element>>& vectors, double rel_tol = 1e-7) {
  if (vectors.empty() || generators.empty()) return false;
  const F& field = generators.front().field();
  const std::size_t d = generators.front().rows();
  detail::SpanBasis<F> span(field, d, rel_tol);
  for (const auto& v : vectors) span.add(v);
  const std::size_t rank = span.rank();
  if (rank == 0 || rank == d) return false;
  for (const auto& g : generators)
    for (const auto& v : vectors) {
      std::vector<typename F::Element> gv(d, field.zero());
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) gv[r] = gv[r] + g(r, c) * v[c];
      detail::SpanBasis<F> probe = span;
      if (probe.add(gv)) return false;
    }
  return true;
}

enum class TorsionType { g_torsion, g_torsionfree, not_applicable };

inline const char* to_string(TorsionType t) {
  switch (t) {
  case TorsionType::g_torsion: return "g_torsion";
  case TorsionType::g_torsionfree: return "g_torsionfree";
  case TorsionType::not_applicable: return "not_applicable";
  }
  return "?";
}

template <Field F>
struct GAction {
  /// lambda with g acting as lambda * I; empty when g is not scalar
  std::optional<typename F::Element> scalar;
  TorsionType torsion = TorsionType::not_applicable;
  /// distance of the image of g from the nearest scalar matrix
  double deviation = 0.0;
};

/// Image of g; complex images are compared with the nearest scalar matrix
/// trace/d * I relative to the size of the image.
template <Field F>
GAction<F> g_action(const ParameterTriple<F>& params, const MatRep<F>& rep, double tolerance = 1e-8) {
  const Matrix<F> g = evaluate(central_g(params), rep);
  const F& field = rep.field();
  GAction<F> out;
  if constexpr (F::is_exact) {
    (void)tolerance;
    out.scalar = g.scalar_value();
    if (out.scalar) out.torsion = field.is_zero(*out.scalar) ? TorsionType::g_torsion : TorsionType::g_torsionfree;
  } else {
    const std::size_t d = g.rows();
    std::complex<double> tr = 0.0;
    for (std::size_t i = 0; i < d; ++i) tr += g(i, i);
    const std::complex<double> lambda = tr / static_cast<double>(d);
    double dev = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) dev = std::max(dev, std::abs(g(i, j) - (i == j ? lambda : 0.0)));
    out.deviation = dev;
    const double scale = std::max(1.0, g.max_abs());
    if (dev <= tolerance * scale) {
      out.scalar = lambda;
      out.torsion = std::abs(lambda) <= tolerance * scale ? TorsionType::g_torsion : TorsionType::g_torsionfree;
    }
  }
  return out;
}

template <Field F>
struct RepClassification {
  Residual residual;
  bool irreducible = false;
  std::size_t closure_dimension = 0;
  GAction<F> g;
  /// irreducible but g not scalar: contradicts Schur's lemma
  bool schur_defect = false;
  std::optional<std::vector<std::vector<typename F::Element>>> witness;
};

template <Field F>
RepClassification<F> classify_rep(const ParameterTriple<F>& params, const MatRep<F>& rep, double tolerance = 1e-8) {
  RepClassification<F> out;
  out.residual = verify_rep(params, rep);
  auto irr = irreducibility(rep);
  out.irreducible = irr.irreducible;
  out.closure_dimension = irr.closure_dimension;
  out.witness = std::move(irr.witness);
  out.g = g_action(params, rep, tolerance);
  out.schur_defect = out.irreducible && !out.g.scalar;
  return out;
}

enum class Dim1Kind { trivial_only, coordinate_axes, everything, finite_lines };

inline const char* to_string(Dim1Kind k) {
  switch (k) {
  case Dim1Kind::trivial_only: return "trivial_only";
  case Dim1Kind::coordinate_axes: return "coordinate_axes";
  case Dim1Kind::everything: return "everything";
  case Dim1Kind::finite_lines: return "finite_lines";
  }
  return "?";
}

/// Nonzero solutions (x, y, z) of (a+b)yz + cx^2 = (a+b)zx + cy^2 = (a+b)xy + cz^2 = 0.
template <Field F>
struct Dim1Solutions {
  Dim1Kind kind = Dim1Kind::trivial_only;
  /// for finite_lines: the lines through [1 : w : -c(a+b)^{-1} w^2], w^3 = 1,
  /// listed for the cube roots of unity present in the field
  std::vector<std::array<typename F::Element, 3>> lines;
  std::string description;
};

template <Field F>
Dim1Solutions<F> solve_dim1(const ParameterTriple<F>& params) {
  const F& f = params.field();
  const auto s = params.a() + params.b();
  const auto& c = params.c();
  Dim1Solutions<F> out;
  if (f.is_zero(c)) {
    if (f.is_zero(s)) {
      out.kind = Dim1Kind::everything;
      out.description = "every (x, y, z)";
    } else {
      out.kind = Dim1Kind::coordinate_axes;
      out.description = "the three coordinate axes";
    }
    return out;
  }
  if (f.is_zero(s) || !f.equal(s * s * s, -(c * c * c))) {
    out.kind = Dim1Kind::trivial_only;
    out.description = "only the trivial representation";
    return out;
  }
  out.kind = Dim1Kind::finite_lines;
  out.description = "lines through [1 : w : -c/(a+b) w^2] with w^3 = 1";
  std::vector<typename F::Element> omegas{f.one()};
  if constexpr (F::is_exact) {
    if (f.order() % 3 == 0) {
      omegas.push_back(root_of_unity(f, 3, 1));
      omegas.push_back(root_of_unity(f, 3, 2));
    }
  } else {
    omegas.push_back(root_of_unity(f, 3, 1));
    omegas.push_back(root_of_unity(f, 3, 2));
  }
  const auto k = -(c / s);
  for (const auto& w : omegas) out.lines.push_back({f.one(), w, k * w * w});
  return out;
}

namespace detail {

/// Anti-identity n x n.
template <Field F>
Matrix<F> anti_identity(const F& f, std::size_t n) {
  Matrix<F> m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = f.one();
  return m;
}

/// [[A, B], [C, D]] from n x n blocks.
template <Field F>
Matrix<F> block2(const Matrix<F>& a, const Matrix<F>& b, const Matrix<F>& c, const Matrix<F>& d) {
  const std::size_t n = a.rows();
  Matrix<F> m(a.field(), 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = a(i, j);
      m(i, j + n) = b(i, j);
      m(i + n, j) = c(i, j);
      m(i + n, j + n) = d(i, j);
    }
  return m;
}

} // namespace detail

/// Two-dimensional representations of S(1,-1,-1).
/// which = 1: variant is the sign s of i = zeta_4^s, field must contain zeta_4.
/// which = 2: variant is k in {1,5,7,11}, xi = zeta_12^k, field must contain zeta_12.
template <Field F>
MatRep<F> family_s1m1m1(const F& f, int which, const typename F::Element& z3, const typename F::Element& z4,
                        int variant = 1) {
  if (f.is_zero(z3)) throw PreconditionError("z3 must be nonzero");
  using E = typename F::Element;
  const E one = f.one(), zero = f.zero();
  const E zz = z4 * z4 / z3;
  const Matrix<F> Z = Matrix<F>::from_rows(f, {{z4, -zz}, {z3, z4}});
  if (which == 1) {
    if (variant != 1 && variant != -1) throw PreconditionError("family 1 variant must be +1 or -1");
    const E si = root_of_unity(f, 4, variant);
    const Matrix<F> X = Matrix<F>::from_rows(f, {{(si + one) * z4, zero}, {zero, -((si - one) * z4)}});
    const Matrix<F> Y = Matrix<F>::from_rows(f, {{z4, si * zz}, {si * z3, z4}});
    return MatRep<F>(X, Y, Z, Provenance::explicit_family);
  }
  if (which == 2) {
    if (variant != 1 && variant != 5 && variant != 7 && variant != 11)
      throw PreconditionError("family 2 needs a primitive twelfth root: variant in {1, 5, 7, 11}");
    const E xi = root_of_unity(f, 12, variant);
    const E xi2 = xi * xi;
    const Matrix<F> X =
        Matrix<F>::from_rows(f, {{xi * (xi2 - xi - one) * z4, zero}, {zero, (xi2 - xi + one) * z4 / (xi - one)}});
    const Matrix<F> Y = Matrix<F>::from_rows(f, {{(xi2 - one) * z4, xi * zz}, {xi * z3, (xi2 - one) * z4}});
    return MatRep<F>(X, Y, Z, Provenance::explicit_family);
  }
  throw PreconditionError("family index must be 1 or 2");
}

enum class DegenerateCase { point_100, point_010, point_001, cube_roots };

inline const char* to_string(DegenerateCase c) {
  switch (c) {
  case DegenerateCase::point_100: return "S(1,0,0)";
  case DegenerateCase::point_010: return "S(0,1,0)";
  case DegenerateCase::point_001: return "S(0,0,1)";
  case DegenerateCase::cube_roots: return "a^3=b^3=c^3";
  }
  return "?";
}

template <Field F>
DegenerateCase degenerate_case(const ParameterTriple<F>& params) {
  if (!params.in_degenerate_set_D()) throw PreconditionError("parameters are not in the degenerate set");
  const F& f = params.field();
  const bool za = f.is_zero(params.a()), zb = f.is_zero(params.b()), zc = f.is_zero(params.c());
  if (zb && zc) return DegenerateCase::point_100;
  if (za && zc) return DegenerateCase::point_010;
  if (za && zb) return DegenerateCase::point_001;
  return DegenerateCase::cube_roots;
}

/// The 2n-dimensional block representations of the degenerate algebras.
/// For a^3 = b^3 = c^3 the triple is read as (1, b/a, c/a) and needs p, y != 0.
template <Field F>
MatRep<F> family_degenerate(const ParameterTriple<F>& params, std::size_t n, const typename F::Element& x,
                            const typename F::Element& y, const typename F::Element& z,
                            const typename F::Element& p) {
  if (n == 0) throw PreconditionError("n must be positive");
  const F& f = params.field();
  const Matrix<F> I = Matrix<F>::identity(f, n);
  const Matrix<F> O(f, n, n);
  const Matrix<F> J = detail::anti_identity(f, n);
  using detail::block2;
  switch (degenerate_case(params)) {
  case DegenerateCase::point_100:
    return MatRep<F>(block2(I.scaled(x), O, O, O), block2(O, O, O, I.scaled(y)), block2(O, J.scaled(z), O, O),
                     Provenance::explicit_family);
  case DegenerateCase::point_010:
    return MatRep<F>(block2(I.scaled(x), O, O, O), block2(O, J.scaled(y), O, O), block2(O, O, O, I.scaled(z)),
                     Provenance::explicit_family);
  case DegenerateCase::point_001:
    return MatRep<F>(block2(O, J.scaled(x), O, O), block2(O, O, J.scaled(y), O), block2(O, J.scaled(z), O, O),
                     Provenance::explicit_family);
  case DegenerateCase::cube_roots: {
    if (f.is_zero(p)) throw PreconditionError("p must be nonzero");
    if (f.is_zero(y)) throw PreconditionError("y must be nonzero");
    const auto b = params.b() / params.a();
    const auto c = params.c() / params.a();
    return MatRep<F>(block2(I.scaled(-(b * x)), O, O, I.scaled(x)), block2(O, J.scaled(-(b * b * c * y / p)), O, O),
                     block2(O, O, J.scaled(p * x * x / y), O), Provenance::explicit_family);
  }
  }
  throw Error("unreachable");
}

} // namespace skly3
