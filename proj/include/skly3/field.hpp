#pragma once

// Field objects.  Every algorithm in the library is a template over a field
// type F that hands out constants and decides zero tests; elements carry the
// arithmetic operators.

#include "skly3/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <string>

namespace skly3 {

template <class F>
concept Field = requires(const F& f, const typename F::Element& a, long n) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_int(n) } -> std::same_as<typename F::Element>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.equal(a, a) } -> std::same_as<bool>;
  { f.magnitude(a) } -> std::same_as<double>;
  { f.embed(a) } -> std::same_as<std::complex<double>>;
  { f.name() } -> std::same_as<std::string>;
  { F::is_exact } -> std::convertible_to<bool>;
  { a + a } -> std::same_as<typename F::Element>;
  { a - a } -> std::same_as<typename F::Element>;
  { a * a } -> std::same_as<typename F::Element>;
  { a / a } -> std::same_as<typename F::Element>;
  { -a } -> std::same_as<typename F::Element>;
};

/// Q(zeta_m); m = 1 is Q itself.
class CyclotomicField {
public:
  using Element = Cyclotomic;
  static constexpr bool is_exact = true;

  explicit CyclotomicField(int m = 1) : m_(m) { (void)detail::cyclotomic_modulus(m); }

  int order() const { return m_; }
  bool is_rationals() const { return m_ == 1; }

  Element zero() const { return Element(mpq_class(0), m_); }
  Element one() const { return Element(mpq_class(1), m_); }
  Element from_int(long n) const { return Element(mpq_class(n), m_); }
  Element from_rational(const mpq_class& q) const { return Element(q, m_); }
  Element zeta(long k = 1) const { return Element::zeta(m_, k); }

  /// Brings an element of a subfield Q(zeta_d), d | m, into this field.
  Element lift(const Element& e) const { return e.order() == m_ ? e : e.promote(m_); }

  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  double magnitude(const Element& a) const { return std::abs(a.embed()); }
  std::complex<double> embed(const Element& a) const { return a.embed(); }

  std::string name() const { return m_ == 1 ? "Q" : "Q(zeta_" + std::to_string(m_) + ")"; }

  friend bool operator==(const CyclotomicField&, const CyclotomicField&) = default;

private:
  int m_;
};

/// Double-precision complex numbers with a relative comparison tolerance.
class ComplexField {
public:
  using Element = std::complex<double>;
  static constexpr bool is_exact = false;

  explicit ComplexField(double tolerance = 1e-9) : tol_(tolerance) {}

  double tolerance() const { return tol_; }

  Element zero() const { return {0.0, 0.0}; }
  Element one() const { return {1.0, 0.0}; }
  Element from_int(long n) const { return {static_cast<double>(n), 0.0}; }
  Element from_rational(const mpq_class& q) const { return {q.get_d(), 0.0}; }
  Element zeta(long k = 1, int m = 1) const {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / m);
  }

  bool is_zero(const Element& a) const { return std::abs(a) <= tol_; }
  bool equal(const Element& a, const Element& b) const {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol_ * scale;
  }
  double magnitude(const Element& a) const { return std::abs(a); }
  std::complex<double> embed(const Element& a) const { return a; }

  std::string name() const { return "complex"; }

  friend bool operator==(const ComplexField&, const ComplexField&) = default;

private:
  double tol_;
};

static_assert(Field<CyclotomicField>);
static_assert(Field<ComplexField>);

/// Integer power by repeated squaring, for any field element type.
template <Field F>
typename F::Element power(const F& field, typename F::Element base, unsigned long e) {
  auto acc = field.one();
  while (e) {
    if (e & 1UL) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

} // namespace skly3
