#pragma once

// Twisted coordinate ring of a finite orbit of size n: homogeneous elements
// are n-tuples, with shifted componentwise multiplication, and its graded
// matrix model with T = k[x^n].

#include "skly3/error.hpp"
#include "skly3/field.hpp"
#include "skly3/matrix.hpp"
#include "skly3/ncpoly.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace skly3 {

/// (c_1, ..., c_n): the degree-d element sum_l c_l u_l^d.
template <Field F>
struct OrbitElement {
  F field;
  std::size_t degree = 0;
  std::vector<typename F::Element> coeffs;

  std::size_t size() const { return coeffs.size(); }

  static OrbitElement unit(const F& f, std::size_t n) {
    return {f, 0, std::vector<typename F::Element>(n, f.one())};
  }

  /// u_l^d alone, l in 1..n.
  static OrbitElement basis(const F& f, std::size_t n, std::size_t d, std::size_t l) {
    if (l < 1 || l > n) throw PreconditionError("orbit index out of range");
    std::vector<typename F::Element> c(n, f.zero());
    c[l - 1] = f.one();
    return {f, d, std::move(c)};
  }

  friend bool operator==(const OrbitElement& a, const OrbitElement& b) {
    if (a.degree != b.degree || a.coeffs.size() != b.coeffs.size()) return false;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      if (!a.field.equal(a.coeffs[i], b.coeffs[i])) return false;
    return true;
  }
};

namespace detail {
/// (l - d) mod n for 0-based l.
inline std::size_t shift_index(std::size_t l, std::size_t d, std::size_t n) { return (l + n - d % n) % n; }
} // namespace detail

/// Component l of e * f is e_l * f_{l - deg e}, indices mod n.
template <Field F>
OrbitElement<F> orbit_mul(const OrbitElement<F>& e, const OrbitElement<F>& f) {
  const std::size_t n = e.size();
  if (n == 0 || f.size() != n) throw DimensionMismatch("orbit sizes differ");
  OrbitElement<F> out{e.field, e.degree + f.degree, std::vector<typename F::Element>(n, e.field.zero())};
  for (std::size_t l = 0; l < n; ++l) out.coeffs[l] = e.coeffs[l] * f.coeffs[detail::shift_index(l, e.degree, n)];
  return out;
}

/// n x n matrix of polynomials in x.
template <Field F>
class GradedMatrix {
public:
  using Element = typename F::Element;
  using Poly = std::map<std::size_t, Element>;

  GradedMatrix(F field, std::size_t n) : field_(std::move(field)), n_(n), entries_(n * n) {}

  std::size_t size() const { return n_; }
  const F& field() const { return field_; }
  const Poly& entry(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  void add(std::size_t i, std::size_t j, std::size_t deg, const Element& c) {
    if (field_.is_zero(c)) return;
    Poly& p = entries_[i * n_ + j];
    auto [it, inserted] = p.try_emplace(deg, c);
    if (inserted) return;
    it->second = it->second + c;
    if (field_.is_zero(it->second)) p.erase(it);
  }

  friend GradedMatrix operator+(GradedMatrix a, const GradedMatrix& b) {
    a.check(b);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = 0; j < a.n_; ++j)
        for (const auto& [d, c] : b.entry(i, j)) a.add(i, j, d, c);
    return a;
  }

  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
    a.check(b);
    GradedMatrix out(a.field_, a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k)
        for (const auto& [da, ca] : a.entry(i, k))
          for (std::size_t j = 0; j < a.n_; ++j)
            for (const auto& [db, cb] : b.entry(k, j)) out.add(i, j, da + db, ca * cb);
    return out;
  }

  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
      const Poly &p = a.entries_[k], &q = b.entries_[k];
      if (p.size() != q.size()) return false;
      auto it = q.begin();
      for (const auto& [d, c] : p) {
        if (d != it->first || !a.field_.equal(c, it->second)) return false;
        ++it;
      }
    }
    return true;
  }

  /// Homogeneous of degree d with support only at (l, l - d mod n).
  bool has_pattern(std::size_t d) const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (const auto& [deg, c] : entry(i, j)) {
          (void)c;
          if (deg != d || j != detail::shift_index(i, d, n_)) return false;
        }
    return true;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < n_; ++i) {
      out += i ? ", [" : "[";
      for (std::size_t j = 0; j < n_; ++j) {
        if (j) out += ", ";
        const Poly& p = entry(i, j);
        if (p.empty()) {
          out += "0";
          continue;
        }
        bool first = true;
        for (const auto& [d, c] : p) {
          if (!first) out += " + ";
          first = false;
          const std::string coeff = detail::format_coefficient(c);
          out += d == 0 ? coeff : (coeff == "1" ? "" : coeff + "*") + "x" + (d > 1 ? "^" + std::to_string(d) : "");
        }
      }
      out += "]";
    }
    return out + "]";
  }

private:
  void check(const GradedMatrix& o) const {
    if (n_ != o.n_) throw DimensionMismatch("graded matrix sizes differ");
  }

  F field_;
  std::size_t n_;
  std::vector<Poly> entries_;
};

/// Entry (l, l - d mod n) = e_l x^d.
template <Field F>
GradedMatrix<F> phi_to_matrix(const OrbitElement<F>& e) {
  const std::size_t n = e.size();
  GradedMatrix<F> m(e.field, n);
  for (std::size_t l = 0; l < n; ++l) m.add(l, detail::shift_index(l, e.degree, n), e.degree, e.coeffs[l]);
  return m;
}

/// Image of e in Mat_n(k) after conjugating by diag(x^1, ..., x^n) and
/// setting x^n = lambda.
template <Field F>
Matrix<F> evaluate_orbit(const OrbitElement<F>& e, const typename F::Element& lambda) {
  const F& f = e.field;
  if (f.is_zero(lambda)) throw PreconditionError("lambda must be nonzero");
  const std::size_t n = e.size();
  Matrix<F> m(f, n, n);
  for (std::size_t l = 0; l < n; ++l) {
    const std::size_t k = detail::shift_index(l, e.degree, n);
    // exponent d + k - l is a nonnegative multiple of n
    const std::size_t t = (e.degree + k - l) / n;
    m(l, k) = m(l, k) + e.coeffs[l] * power(f, lambda, static_cast<unsigned long>(t));
  }
  return m;
}

/// Images of the degree-1 basis u_1, ..., u_n in the n-dimensional
/// representation at x^n = lambda.
template <Field F>
std::vector<Matrix<F>> evaluation_irrep(const F& f, std::size_t n, const typename F::Element& lambda) {
  if (n == 0) throw PreconditionError("n must be positive");
  if (f.is_zero(lambda)) throw PreconditionError("lambda must be nonzero");
  std::vector<Matrix<F>> out;
  for (std::size_t l = 1; l <= n; ++l) out.push_back(evaluate_orbit(OrbitElement<F>::basis(f, n, 1, l), lambda));
  return out;
}

} // namespace skly3
