#pragma once

#include "skly3/field.hpp"
#include "skly3/ncpoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace skly3 {

/// Commutative polynomial in a fixed list of named variables.
template <Field F>
class CommPoly {
public:
  using Element = typename F::Element;
  using Exponents = std::vector<int>;

  CommPoly(F field, std::vector<std::string> vars) : field_(std::move(field)), vars_(std::move(vars)) {}

  static CommPoly constant(const F& field, std::vector<std::string> vars, const Element& c) {
    CommPoly p(field, std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
  }

  static CommPoly variable(const F& field, std::vector<std::string> vars, std::size_t i) {
    CommPoly p(field, std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e.at(i) = 1;
    p.add_term(e, field.one());
    return p;
  }

  const F& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Element>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Element coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  void add_term(const Exponents& e, const Element& c) {
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = it->second + c;
    if (field_.is_zero(it->second)) terms_.erase(it);
  }

  CommPoly& operator+=(const CommPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  CommPoly& operator-=(const CommPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  CommPoly operator-() const { return CommPoly(field_, vars_) - *this; }

  friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    CommPoly out(a.field_, a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  CommPoly scaled(const Element& s) const {
    CommPoly out(field_, vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
  }

  Element evaluate(const std::vector<Element>& point) const {
    Element acc = field_.zero();
    for (const auto& [e, c] : terms_) {
      Element t = c;
      for (std::size_t i = 0; i < e.size(); ++i) t = t * power(field_, point.at(i), static_cast<unsigned long>(e[i]));
      acc = acc + t;
    }
    return acc;
  }

  friend bool operator==(const CommPoly& a, const CommPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (e != it->first || !a.field_.equal(c, it->second)) return false;
      ++it;
    }
    return true;
  }

  /// Text such as "36*x*y*z - 6*x^3 - 6*y^3 - 6*z^3" (terms in descending
  /// exponent order).
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string coeff = detail::format_coefficient(c);
      bool neg = !coeff.empty() && coeff[0] == '-';
      if (neg) coeff.erase(0, 1);
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
        out += coeff;
      else
        out += (coeff == "1" ? std::string() : coeff + "*") + mono;
    }
    return out;
  }

private:
  F field_;
  std::vector<std::string> vars_;
  std::map<Exponents, Element> terms_;
};

} // namespace skly3
