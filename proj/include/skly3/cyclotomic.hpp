#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_m).  An element is stored
// as its unique representative of degree < phi(m) modulo the m-th cyclotomic
// polynomial, so equality is coefficient-wise.  m = 1 is the field Q.

#include "skly3/error.hpp"

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace skly3 {

namespace detail {

/// Dense polynomial over Q, coefficients from low to high degree.
using QPoly = std::vector<mpq_class>;

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

inline QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

/// Quotient and remainder of a by a nonzero b.
inline std::pair<QPoly, QPoly> poly_divmod(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  if (b.empty()) throw DivisionByZero();
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly quot(a.size() - b.size() + 1, mpq_class(0));
  const mpq_class lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    mpq_class f = a.back() / lead;
    quot[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(quot);
  return {quot, a};
}

/// Data attached to one field Q(zeta_m): Phi_m and a table of x^k mod Phi_m
/// for phi <= k <= 2 phi - 2, enough to reduce any product of two reduced
/// elements.
struct CyclotomicModulus {
  int m = 1;
  int phi = 1;
  QPoly phi_poly;
  std::vector<QPoly> high_powers;

  QPoly reduce(QPoly p) const {
    trim(p);
    if (static_cast<int>(p.size()) <= phi) {
      p.resize(static_cast<std::size_t>(phi), mpq_class(0));
      return p;
    }
    if (static_cast<int>(p.size()) <= 2 * phi - 1) {
      QPoly out(p.begin(), p.begin() + phi);
      for (std::size_t k = static_cast<std::size_t>(phi); k < p.size(); ++k) {
        if (p[k] == 0) continue;
        const QPoly& r = high_powers[k - static_cast<std::size_t>(phi)];
        for (int i = 0; i < phi; ++i) out[static_cast<std::size_t>(i)] += p[k] * r[static_cast<std::size_t>(i)];
      }
      return out;
    }
    QPoly rem = poly_divmod(std::move(p), phi_poly).second;
    rem.resize(static_cast<std::size_t>(phi), mpq_class(0));
    return rem;
  }
};

inline QPoly cyclotomic_polynomial(int m) {
  // x^m - 1 divided by Phi_d for every proper divisor d of m.
  QPoly num(static_cast<std::size_t>(m) + 1, mpq_class(0));
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = poly_divmod(num, cyclotomic_polynomial(d)).first;
  }
  return num;
}

inline std::unique_ptr<CyclotomicModulus> make_modulus(int m) {
  auto mod = std::make_unique<CyclotomicModulus>();
  mod->m = m;
  mod->phi_poly = cyclotomic_polynomial(m);
  mod->phi = static_cast<int>(mod->phi_poly.size()) - 1;
  const auto phi = static_cast<std::size_t>(mod->phi);
  // x^phi = -(Phi_m - x^phi)
  QPoly cur(phi, mpq_class(0));
  for (std::size_t i = 0; i < phi; ++i) cur[i] = -mod->phi_poly[i];
  for (std::size_t k = phi; k + 1 < 2 * phi; ++k) {
    mod->high_powers.push_back(cur);
    // multiply by x and fold the overflowing x^phi term back in
    mpq_class top = cur[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < phi; ++i) cur[i] -= top * mod->phi_poly[i];
  }
  return mod;
}

inline const CyclotomicModulus& cyclotomic_modulus(int m) {
  if (m < 1) throw PreconditionError("cyclotomic order must be positive, got " + std::to_string(m));
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicModulus>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[m];
  if (!slot) slot = make_modulus(m);
  return *slot;
}

} // namespace detail

/// An element of Q(zeta_m).
class Cyclotomic {
public:
  Cyclotomic() : Cyclotomic(mpq_class(0), 1) {}

  explicit Cyclotomic(mpq_class value, int m = 1) : mod_(&detail::cyclotomic_modulus(m)) {
    value.canonicalize();
    coeffs_.assign(static_cast<std::size_t>(mod_->phi), mpq_class(0));
    coeffs_[0] = std::move(value);
  }

  /// Reduces an arbitrary polynomial in zeta_m.
  static Cyclotomic from_polynomial(detail::QPoly poly, int m) {
    Cyclotomic out(mpq_class(0), m);
    for (auto& c : poly) c.canonicalize();
    out.coeffs_ = out.mod_->reduce(std::move(poly));
    return out;
  }

  /// zeta_m^k for any integer k.
  static Cyclotomic zeta(int m, long k = 1) {
    long e = k % m;
    if (e < 0) e += m;
    detail::QPoly p(static_cast<std::size_t>(e) + 1, mpq_class(0));
    p[static_cast<std::size_t>(e)] = 1;
    return from_polynomial(std::move(p), m);
  }

  int order() const { return mod_->m; }
  int degree() const { return mod_->phi; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  const mpq_class& rational_part() const { return coeffs_[0]; }

  Cyclotomic operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  Cyclotomic& operator-=(const Cyclotomic& o) {
    check_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  Cyclotomic& operator*=(const Cyclotomic& o) {
    check_same_field(o);
    if (mod_->phi == 1) {
      coeffs_[0] *= o.coeffs_[0];
      return *this;
    }
    const auto phi = coeffs_.size();
    detail::QPoly prod(2 * phi - 1, mpq_class(0));
    for (std::size_t i = 0; i < phi; ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < phi; ++j)
        if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = mod_->reduce(std::move(prod));
    return *this;
  }

  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same_field(b);
    return a.coeffs_ == b.coeffs_;
  }

  Cyclotomic inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (mod_->phi == 1) return Cyclotomic(1 / coeffs_[0], mod_->m);
    // extended Euclid: s*a + t*Phi = 1
    detail::QPoly r0 = mod_->phi_poly, r1 = coeffs_;
    detail::trim(r1);
    detail::QPoly s0{}, s1{mpq_class(1)};
    while (!r1.empty()) {
      auto [q, r] = detail::poly_divmod(r0, r1);
      detail::QPoly s = detail::poly_sub(s0, detail::poly_mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    // r0 is a nonzero constant since Phi_m is irreducible
    mpq_class c = r0[0];
    for (auto& x : s0) x /= c;
    return from_polynomial(std::move(s0), mod_->m);
  }

  Cyclotomic pow(long e) const {
    Cyclotomic base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Cyclotomic acc(mpq_class(1), mod_->m);
    while (n) {
      if (n & 1UL) acc *= base;
      base *= base;
      n >>= 1;
    }
    return acc;
  }

  /// The complex embedding zeta_m -> exp(2 pi i / m).
  std::complex<double> embed() const {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / mod_->m;
      acc += coeffs_[k].get_d() * std::polar(1.0, angle);
    }
    return acc;
  }

  /// Image in Q(zeta_target) under zeta_m -> zeta_target^(target/m).
  Cyclotomic promote(int target) const {
    if (target % mod_->m != 0)
      throw FieldMismatch("cannot promote Q(zeta_" + std::to_string(mod_->m) + ") into Q(zeta_" +
                          std::to_string(target) + ")");
    const auto step = static_cast<std::size_t>(target / mod_->m);
    detail::QPoly p(step * (coeffs_.size() - 1) + 1, mpq_class(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) p[k * step] = coeffs_[k];
    return from_polynomial(std::move(p), target);
  }

  /// Canonical text, e.g. "1/2*z^2 - 1".
  std::string to_string() const {
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const mpq_class& c = coeffs_[k];
      if (c == 0) continue;
      const bool neg = c < 0;
      mpq_class a = neg ? mpq_class(-c) : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (k == 0) {
        out += a.get_str();
        continue;
      }
      if (a != 1) out += a.get_str() + "*";
      out += k == 1 ? std::string("z") : "z^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
  }

private:
  void check_same_field(const Cyclotomic& o) const {
    if (mod_ != o.mod_)
      throw FieldMismatch("mixed Q(zeta_" + std::to_string(mod_->m) + ") and Q(zeta_" +
                          std::to_string(o.mod_->m) + ") operands");
  }

  const detail::CyclotomicModulus* mod_;
  std::vector<mpq_class> coeffs_;
};

} // namespace skly3
