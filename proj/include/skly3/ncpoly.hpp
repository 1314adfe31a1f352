#pragma once

// The free algebra k{x, y, z}: words, noncommutative polynomials, cyclic
// derivatives of superpotentials, and the Sklyanin relation builders.

#include "skly3/error.hpp"
#include "skly3/field.hpp"
#include "skly3/matrix.hpp"
#include "skly3/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skly3 {

enum class Gen : std::uint8_t { x = 0, y = 1, z = 2 };

inline constexpr std::array<Gen, 3> all_generators{Gen::x, Gen::y, Gen::z};

inline char gen_char(Gen g) { return "xyz"[static_cast<int>(g)]; }

/// A monomial of the free algebra; the empty word is the unit.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Gen> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Gen> letters) : letters_(letters) {}

  /// Parses a string over {x, y, z}; "1" or "" is the empty word.
  static Word parse(std::string_view s) {
    Word w;
    if (s == "1") return w;
    for (char c : s) {
      switch (c) {
      case 'x': w.letters_.push_back(Gen::x); break;
      case 'y': w.letters_.push_back(Gen::y); break;
      case 'z': w.letters_.push_back(Gen::z); break;
      default: throw ParseError("invalid letter '" + std::string(1, c) + "' in word '" + std::string(s) + "'");
      }
    }
    return w;
  }

  /// The word whose base-3 digits (most significant first) are index.
  static Word from_index(std::uint64_t index, std::size_t degree) {
    std::vector<Gen> letters(degree);
    for (std::size_t i = degree; i-- > 0;) {
      letters[i] = static_cast<Gen>(index % 3);
      index /= 3;
    }
    return Word(std::move(letters));
  }

  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Gen>& letters() const { return letters_; }
  Gen operator[](std::size_t i) const { return letters_[i]; }

  /// Base-3 index among the 3^degree words of this degree.
  std::uint64_t index() const {
    std::uint64_t out = 0;
    for (Gen g : letters_) out = out * 3 + static_cast<std::uint64_t>(g);
    return out;
  }

  Word rotated(std::size_t k) const {
    std::vector<Gen> out;
    out.reserve(letters_.size());
    for (std::size_t i = 0; i < letters_.size(); ++i) out.push_back(letters_[(i + k) % letters_.size()]);
    return Word(std::move(out));
  }

  friend Word operator*(const Word& a, const Word& b) {
    std::vector<Gen> out = a.letters_;
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
  }

  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (Gen g : letters_) s += gen_char(g);
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;

  /// Degree first, then lexicographic with x < y < z.
  friend bool operator<(const Word& a, const Word& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.letters_ < b.letters_;
  }

private:
  std::vector<Gen> letters_;
};

namespace detail {

inline std::string format_coefficient(const Cyclotomic& c) {
  std::string s = c.to_string();
  return c.is_rational() ? s : "(" + s + ")";
}

inline std::string format_coefficient(const std::complex<double>& c) { return format_scalar(Scalar(c)); }

inline FieldTag tag_of(const CyclotomicField& f) { return FieldTag::cyclotomic(f.order()); }
inline FieldTag tag_of(const ComplexField&) { return FieldTag::complex(); }

} // namespace detail

/// A noncommutative polynomial: a finite map from words to nonzero coefficients.
template <Field F>
class NcPoly {
public:
  using Element = typename F::Element;
  using TermMap = std::map<Word, Element>;

  explicit NcPoly(F field) : field_(std::move(field)) {}

  static NcPoly monomial(const F& field, const Word& w, const Element& coeff) {
    NcPoly p(field);
    p.add_term(w, coeff);
    return p;
  }

  static NcPoly monomial(const F& field, const Word& w) { return monomial(field, w, field.one()); }

  static NcPoly generator(const F& field, Gen g) { return monomial(field, Word{g}); }

  const F& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Element coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  void add_term(const Word& w, const Element& coeff) {
    if (field_.is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (inserted) return;
    it->second = it->second + coeff;
    if (field_.is_zero(it->second)) terms_.erase(it);
  }

  std::optional<std::size_t> max_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
  }

  std::optional<std::size_t> min_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();
  }

  /// The zero polynomial counts as homogeneous.
  bool is_homogeneous() const { return terms_.empty() || *min_degree() == *max_degree(); }

  NcPoly homogeneous_component(std::size_t d) const {
    NcPoly out(field_);
    for (const auto& [w, c] : terms_)
      if (w.degree() == d) out.terms_.emplace(w, c);
    return out;
  }

  NcPoly& operator+=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }

  NcPoly& operator-=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }

  friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    NcPoly out(a.field_);
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_) out.add_term(u * v, cu * cv);
    return out;
  }

  NcPoly scaled(const Element& s) const {
    NcPoly out(field_);
    for (const auto& [w, c] : terms_) out.add_term(w, c * s);
    return out;
  }

  friend bool operator==(const NcPoly& a, const NcPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [w, c] : a.terms_) {
      if (!(w == it->first) || !a.field_.equal(c, it->second)) return false;
      ++it;
    }
    return true;
  }

  /// Text form "coeff*word + ...", e.g. "-2*xxx + 2*yxz".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      std::string coeff = detail::format_coefficient(c);
      bool neg = !coeff.empty() && coeff[0] == '-';
      if (neg) coeff.erase(0, 1);
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (w.empty())
        out += coeff;
      else
        out += (coeff == "1" ? std::string() : coeff + "*") + w.to_string();
    }
    return out;
  }

private:
  F field_;
  TermMap terms_;
};

/// Parses the polynomial text format.  Non-rational cyclotomic coefficients
/// must be parenthesised, e.g. "(z + 1)*xy - yx".
template <Field F>
NcPoly<F> parse_ncpoly(std::string_view text, const F& field) {
  NcPoly<F> out(field);
  const FieldTag tag = detail::tag_of(field);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (text.substr(pos) == "0") return out;
  bool first = true;
  while (pos < text.size()) {
    skip();
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative = text[pos] == '-';
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in polynomial '" + std::string(text) + "'");
    }
    first = false;
    // a term ends at the next top-level sign
    std::size_t start = pos;
    int depth = 0;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if (depth == 0 && (c == '+' || c == '-') && pos > start) {
        // a sign right after '^' or '*' belongs to the coefficient
        std::size_t k = pos;
        while (k > start && std::isspace(static_cast<unsigned char>(text[k - 1]))) --k;
        if (k > start && (text[k - 1] == '^' || text[k - 1] == '*' || text[k - 1] == '/')) {
          ++pos;
          continue;
        }
        break;
      }
      ++pos;
    }
    std::string term(text.substr(start, pos - start));
    while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back()))) term.pop_back();
    if (term.empty()) throw ParseError("empty term in polynomial '" + std::string(text) + "'");

    auto is_word = [](std::string_view s) {
      return !s.empty() && s.find_first_not_of("xyz") == std::string_view::npos;
    };
    typename F::Element coeff = field.one();
    Word word;
    std::size_t star = std::string::npos;
    depth = 0;
    for (std::size_t i = 0; i < term.size(); ++i) {
      if (term[i] == '(' || term[i] == '[') ++depth;
      if (term[i] == ')' || term[i] == ']') --depth;
      if (depth == 0 && term[i] == '*') star = i;
    }
    std::string tail = star == std::string::npos ? term : term.substr(star + 1);
    auto tail_begin = tail.find_first_not_of(" \t");
    tail = tail_begin == std::string::npos ? std::string() : tail.substr(tail_begin);
    if (is_word(tail)) {
      word = Word::parse(tail);
      if (star != std::string::npos) coeff = to_element(field, parse_scalar(term.substr(0, star), tag));
    } else {
      coeff = to_element(field, parse_scalar(term, tag));
    }
    out.add_term(word, negative ? -coeff : coeff);
  }
  return out;
}

/// Projective parameters (a, b, c) of S(a, b, c).
template <Field F>
class ParameterTriple {
public:
  using Element = typename F::Element;

  ParameterTriple(F field, Element a, Element b, Element c)
      : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (field_.is_zero(a_) && field_.is_zero(b_) && field_.is_zero(c_))
      throw PreconditionError("parameter triple (0, 0, 0) is not a projective point");
  }

  static ParameterTriple of_ints(const F& field, long a, long b, long c) {
    return ParameterTriple(field, field.from_int(a), field.from_int(b), field.from_int(c));
  }

  const F& field() const { return field_; }
  const Element& a() const { return a_; }
  const Element& b() const { return b_; }
  const Element& c() const { return c_; }

  ParameterTriple scaled(const Element& s) const { return ParameterTriple(field_, a_ * s, b_ * s, c_ * s); }

  /// [a:b:c] is a coordinate point or satisfies a^3 = b^3 = c^3 (projectively 1).
  bool in_degenerate_set_D() const {
    const int zeros = field_.is_zero(a_) + field_.is_zero(b_) + field_.is_zero(c_);
    if (zeros == 2) return true;
    if (zeros > 0) return false;
    const Element a3 = a_ * a_ * a_, b3 = b_ * b_ * b_, c3 = c_ * c_ * c_;
    return field_.equal(a3, b3) && field_.equal(b3, c3);
  }

  /// abc != 0 and (3abc)^3 != (a^3 + b^3 + c^3)^3.
  bool satisfies_condition_2() const {
    const Element mu = a_ * b_ * c_;
    if (field_.is_zero(mu)) return false;
    const Element lambda = a_ * a_ * a_ + b_ * b_ * b_ + c_ * c_ * c_;
    const Element three_mu = field_.from_int(3) * mu;
    return !field_.equal(three_mu * three_mu * three_mu, lambda * lambda * lambda);
  }

  bool is_sklyanin() const { return !in_degenerate_set_D() && satisfies_condition_2(); }

private:
  F field_;
  Element a_, b_, c_;
};

/// Sum over occurrences of x_j in each word of the rotation that starts just
/// after that occurrence.
template <Field F>
NcPoly<F> cyclic_derivative(const NcPoly<F>& phi, Gen j) {
  NcPoly<F> out(phi.field());
  for (const auto& [w, c] : phi.terms()) {
    const std::size_t r = w.degree();
    for (std::size_t s = 0; s < r; ++s) {
      if (w[s] != j) continue;
      std::vector<Gen> rot;
      rot.reserve(r - 1);
      for (std::size_t k = 1; k < r; ++k) rot.push_back(w[(s + k) % r]);
      out.add_term(Word(std::move(rot)), c);
    }
  }
  return out;
}

/// a*xyz + b*yxz + (c/3)(x^3 + y^3 + z^3).
template <Field F>
NcPoly<F> build_phi_marg(const ParameterTriple<F>& p) {
  const F& f = p.field();
  NcPoly<F> out(f);
  out.add_term(Word::parse("xyz"), p.a());
  out.add_term(Word::parse("yxz"), p.b());
  const auto c3 = p.c() / f.from_int(3);
  for (auto w : {"xxx", "yyy", "zzz"}) out.add_term(Word::parse(w), c3);
  return out;
}

/// (a yz + b zy + c x^2, a zx + b xz + c y^2, a xy + b yx + c z^2).
template <Field F>
std::array<NcPoly<F>, 3> sklyanin_relations(const ParameterTriple<F>& p) {
  const F& f = p.field();
  auto rel = [&](const char* ab, const char* ba, const char* sq) {
    NcPoly<F> r(f);
    r.add_term(Word::parse(ab), p.a());
    r.add_term(Word::parse(ba), p.b());
    r.add_term(Word::parse(sq), p.c());
    return r;
  };
  return {rel("yz", "zy", "xx"), rel("zx", "xz", "yy"), rel("xy", "yx", "zz")};
}

/// The cubic c(a^3-c^3)x^3 + a(b^3-c^3)xyz + b(c^3-a^3)yxz + c(c^3-b^3)y^3.
template <Field F>
NcPoly<F> central_g(const ParameterTriple<F>& p) {
  const auto &a = p.a(), &b = p.b(), &c = p.c();
  const auto a3 = a * a * a, b3 = b * b * b, c3 = c * c * c;
  NcPoly<F> g(p.field());
  g.add_term(Word::parse("xxx"), c * (a3 - c3));
  g.add_term(Word::parse("xyz"), a * (b3 - c3));
  g.add_term(Word::parse("yxz"), b * (c3 - a3));
  g.add_term(Word::parse("yyy"), c * (c3 - b3));
  return g;
}

/// Image of p under x -> X, y -> Y, z -> Z; the empty word maps to the identity.
template <Field F>
Matrix<F> evaluate(const NcPoly<F>& p, const MatRep<F>& rep) {
  const std::size_t d = rep.dimension();
  const F& field = rep.field();
  Matrix<F> out(field, d, d);
  // terms are sorted, so consecutive words share prefixes; reuse them
  std::vector<Matrix<F>> prefix{Matrix<F>::identity(field, d)};
  Word last;
  for (const auto& [w, c] : p.terms()) {
    std::size_t common = 0;
    while (common < w.degree() && common < last.degree() && w[common] == last[common]) ++common;
    prefix.resize(common + 1, prefix.front());
    for (std::size_t k = common; k < w.degree(); ++k)
      prefix.push_back(prefix.back() * rep.generator(static_cast<std::size_t>(w[k])));
    out += prefix.back().scaled(c);
    last = w;
  }
  return out;
}

} // namespace skly3
