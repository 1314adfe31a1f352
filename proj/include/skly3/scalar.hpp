#pragma once

// Runtime-tagged scalars used at the I/O boundary (command line, JSON files).
// Inside the algorithms the field is a template parameter; a Scalar is
// unpacked into CyclotomicField or ComplexField elements before use.
//
// Text format: rationals "p/q" (decimals like "0.25" are read exactly);
// cyclotomic values are expressions in the symbol "z" = zeta_m, such as
// "1/2*z^2 - 1"; complex values are "[re, im]" or a plain real number.

#include "skly3/cyclotomic.hpp"
#include "skly3/error.hpp"
#include "skly3/field.hpp"

#include <cctype>
#include <charconv>
#include <complex>
#include <cstdio>
#include <string>
#include <string_view>
#include <variant>

namespace skly3 {

enum class FieldKind { rational, cyclotomic, complex_float };

struct FieldTag {
  FieldKind kind = FieldKind::rational;
  int m = 1;

  static FieldTag rationals() { return {FieldKind::rational, 1}; }
  static FieldTag cyclotomic(int m) {
    return m == 1 ? rationals() : FieldTag{FieldKind::cyclotomic, m};
  }
  static FieldTag complex() { return {FieldKind::complex_float, 0}; }

  bool is_exact() const { return kind != FieldKind::complex_float; }

  /// Accepts "Q", "Q(zeta_m)" and "complex".
  static FieldTag parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text == "complex" || text == "C") return complex();
    constexpr std::string_view prefix = "Q(zeta_";
    if (text.starts_with(prefix) && text.ends_with(")")) {
      auto digits = text.substr(prefix.size(), text.size() - prefix.size() - 1);
      int m = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
      if (ec == std::errc() && ptr == digits.data() + digits.size() && m >= 1) return cyclotomic(m);
    }
    throw ParseError("unknown field '" + std::string(text) + "'");
  }

  std::string name() const {
    switch (kind) {
    case FieldKind::rational: return "Q";
    case FieldKind::cyclotomic: return "Q(zeta_" + std::to_string(m) + ")";
    case FieldKind::complex_float: return "complex";
    }
    return "?";
  }

  friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

class Scalar {
public:
  Scalar() : value_(Cyclotomic()) {}
  Scalar(Cyclotomic v) : value_(std::move(v)) {}
  Scalar(std::complex<double> v) : value_(v) {}

  FieldTag tag() const {
    if (auto* c = std::get_if<Cyclotomic>(&value_)) return FieldTag::cyclotomic(c->order());
    return FieldTag::complex();
  }

  bool is_exact() const { return std::holds_alternative<Cyclotomic>(value_); }

  const Cyclotomic& exact() const {
    if (auto* c = std::get_if<Cyclotomic>(&value_)) return *c;
    throw FieldMismatch("complex scalar used where an exact value is required");
  }

  std::complex<double> complex_value() const {
    if (auto* c = std::get_if<std::complex<double>>(&value_)) return *c;
    throw FieldMismatch("exact scalar used where a complex value is required; promote explicitly");
  }

  bool is_zero() const {
    if (auto* c = std::get_if<Cyclotomic>(&value_)) return c->is_zero();
    return std::get<std::complex<double>>(value_) == std::complex<double>{};
  }

private:
  std::variant<Cyclotomic, std::complex<double>> value_;
};

enum class ArithOp { add, sub, mul, div };

inline Scalar field_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  if (!(a.tag() == b.tag()))
    throw FieldMismatch("field mismatch: " + a.tag().name() + " vs " + b.tag().name());
  if (a.is_exact()) {
    const auto& x = a.exact();
    const auto& y = b.exact();
    switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
    }
  }
  const auto x = a.complex_value();
  const auto y = b.complex_value();
  switch (op) {
  case ArithOp::add: return x + y;
  case ArithOp::sub: return x - y;
  case ArithOp::mul: return x * y;
  case ArithOp::div:
    if (y == std::complex<double>{}) throw DivisionByZero();
    return x / y;
  }
  return Scalar();
}

inline Scalar embed_complex(const Scalar& s) {
  if (!s.is_exact()) return s;
  return s.exact().embed();
}

/// Explicit promotion along Q -> Q(zeta_m) -> complex.
inline Scalar promote(const Scalar& s, FieldTag target) {
  if (s.tag() == target) return s;
  if (target.kind == FieldKind::complex_float) return embed_complex(s);
  if (!s.is_exact()) throw FieldMismatch("cannot promote a complex scalar to an exact field");
  return s.exact().promote(target.m);
}

namespace detail {

class CyclotomicParser {
public:
  CyclotomicParser(std::string_view text, int m) : text_(text), m_(m) {}

  Cyclotomic parse() {
    Cyclotomic v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Cyclotomic expr() {
    Cyclotomic acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Cyclotomic term() {
    Cyclotomic acc = unary();
    for (;;) {
      if (accept('*'))
        acc *= unary();
      else if (accept('/'))
        acc /= unary();
      else
        return acc;
    }
  }

  Cyclotomic unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Cyclotomic power() {
    Cyclotomic base = atom();
    if (!accept('^')) return base;
    skip_ws();
    bool neg = accept('-');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    return base.pow(neg ? -e : e);
  }

  Cyclotomic atom() {
    skip_ws();
    if (accept('(')) {
      Cyclotomic v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < text_.size() && text_[pos_] == 'z') {
      if (m_ == 1) fail("symbol 'z' needs a cyclotomic field");
      ++pos_;
      return Cyclotomic::zeta(m_, 1);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    mpq_class value(std::string(text_.substr(start, pos_ - start)));
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::size_t fstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string frac(text_.substr(fstart, pos_ - fstart));
      if (!frac.empty()) {
        mpz_class den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        mpq_class part(mpz_class(frac), den);
        part.canonicalize();
        value += part;
      }
    }
    value.canonicalize();
    return Cyclotomic(value, m_);
  }

  std::string_view text_;
  int m_;
  std::size_t pos_ = 0;
};

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace detail

inline Cyclotomic parse_cyclotomic(std::string_view text, int m) {
  return detail::CyclotomicParser(text, m).parse();
}

inline std::complex<double> parse_complex(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) throw ParseError("empty complex value");
  try {
    if (s[first] == '[') {
      auto close = s.find(']');
      auto comma = s.find(',');
      if (close == std::string::npos || comma == std::string::npos || comma > close)
        throw ParseError("complex value must look like [re, im]: '" + s + "'");
      std::size_t used = 0;
      std::string re = s.substr(first + 1, comma - first - 1);
      std::string im = s.substr(comma + 1, close - comma - 1);
      double r = std::stod(re, &used);
      double i = std::stod(im, &used);
      return {r, i};
    }
    std::size_t used = 0;
    double r = std::stod(s, &used);
    if (s.find_first_not_of(" \t", used) != std::string::npos) throw ParseError("trailing text in '" + s + "'");
    return {r, 0.0};
  } catch (const std::logic_error&) {
    throw ParseError("malformed complex value '" + s + "'");
  }
}

inline Scalar parse_scalar(std::string_view text, FieldTag field) {
  if (field.kind == FieldKind::complex_float) {
    // exact-looking inputs such as "1/3" are accepted and embedded
    auto first = text.find_first_not_of(" \t");
    if (first != std::string_view::npos && text[first] != '[') {
      try {
        return parse_complex(text);
      } catch (const ParseError&) {
        return embed_complex(parse_cyclotomic(text, 1));
      }
    }
    return parse_complex(text);
  }
  return parse_cyclotomic(text, field.m);
}

inline std::string format_scalar(const Scalar& s) {
  if (s.is_exact()) return s.exact().to_string();
  auto c = s.complex_value();
  return "[" + detail::format_double(c.real()) + ", " + detail::format_double(c.imag()) + "]";
}

/// Unpacks a tagged scalar into an element of a concrete field.
inline Cyclotomic to_element(const CyclotomicField& field, const Scalar& s) {
  if (!s.is_exact()) throw FieldMismatch("complex scalar given for exact field " + field.name());
  return field.lift(s.exact());
}

inline std::complex<double> to_element(const ComplexField&, const Scalar& s) {
  return embed_complex(s).complex_value();
}

} // namespace skly3
