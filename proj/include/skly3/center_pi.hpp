#pragma once

// Centers: the skew ring S(1,q,0), the invariant ring of Z_n x Z_n on C^3,
// central elements of S(1,-1,-1), and PI degree predictions.

#include "skly3/error.hpp"
#include "skly3/field.hpp"
#include "skly3/graded_quotient.hpp"
#include "skly3/hesse.hpp"
#include "skly3/ncpoly.hpp"

#include <array>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace skly3 {

/// coefficient * x^e0 y^e1 z^e2 in S(1,q,0).
template <Field F>
struct SkewMonomial {
  typename F::Element coefficient;
  std::array<unsigned, 3> exponents{0, 0, 0};

  std::size_t degree() const { return exponents[0] + exponents[1] + exponents[2]; }
};

/// Scalars s with (later)(earlier) = s * (earlier)(later) for earlier < later:
/// yx = -q^{-1} xy, zy = -q^{-1} yz, zx = -q xz.
template <Field F>
typename F::Element skew_swap_scalar(const F& f, const typename F::Element& q, Gen earlier, Gen later) {
  if (earlier == Gen::x && later == Gen::z) return -q;
  return -(f.one() / q);
}

namespace detail {

template <Field F>
SkewMonomial<F> collect(const F& f, const std::vector<Gen>& letters, typename F::Element coeff) {
  SkewMonomial<F> m{std::move(coeff), {0, 0, 0}};
  for (Gen g : letters) ++m.exponents[static_cast<int>(g)];
  (void)f;
  return m;
}

} // namespace detail

/// Bubble sort of the word into x^a y^b z^c, collecting swap scalars.
template <Field F>
SkewMonomial<F> skew_normal_form(const F& f, const Word& w, const typename F::Element& q) {
  if (f.is_zero(q)) throw PreconditionError("q must be nonzero");
  std::vector<Gen> letters = w.letters();
  typename F::Element coeff = f.one();
  for (std::size_t pass = 0; pass < letters.size(); ++pass)
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
      if (letters[i] > letters[i + 1]) {
        coeff = coeff * skew_swap_scalar(f, q, letters[i + 1], letters[i]);
        std::swap(letters[i], letters[i + 1]);
      }
  return detail::collect(f, letters, coeff);
}

/// Same normal form, choosing the out-of-order adjacent pair to swap at random.
template <Field F>
SkewMonomial<F> skew_normal_form_random(const F& f, const Word& w, const typename F::Element& q, std::mt19937_64& rng) {
  if (f.is_zero(q)) throw PreconditionError("q must be nonzero");
  std::vector<Gen> letters = w.letters();
  typename F::Element coeff = f.one();
  for (;;) {
    std::vector<std::size_t> inversions;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
      if (letters[i] > letters[i + 1]) inversions.push_back(i);
    if (inversions.empty()) break;
    const std::size_t i = inversions[std::uniform_int_distribution<std::size_t>(0, inversions.size() - 1)(rng)];
    coeff = coeff * skew_swap_scalar(f, q, letters[i + 1], letters[i]);
    std::swap(letters[i], letters[i + 1]);
  }
  return detail::collect(f, letters, coeff);
}

/// Normal form of a polynomial as a map exponent -> coefficient.
template <Field F>
std::map<std::array<unsigned, 3>, typename F::Element> skew_normal_form(const NcPoly<F>& p,
                                                                        const typename F::Element& q) {
  const F& f = p.field();
  std::map<std::array<unsigned, 3>, typename F::Element> out;
  for (const auto& [w, c] : p.terms()) {
    auto m = skew_normal_form(f, w, q);
    auto [it, inserted] = out.try_emplace(m.exponents, c * m.coefficient);
    if (!inserted) it->second = it->second + c * m.coefficient;
    if (f.is_zero(it->second)) out.erase(it);
  }
  return out;
}

inline Word monomial_word(const std::array<unsigned, 3>& e) {
  std::vector<Gen> letters;
  for (int g = 0; g < 3; ++g) letters.insert(letters.end(), e[g], static_cast<Gen>(g));
  return Word(std::move(letters));
}

/// s_g with M g = s_g g M for the normal monomial M and generator g.
template <Field F>
std::array<typename F::Element, 3> commutation_scalars(const F& f, const std::array<unsigned, 3>& e,
                                                       const typename F::Element& q) {
  const auto nq = -q;
  const auto nqi = -(f.one() / q);
  auto pw = [&](const typename F::Element& b, unsigned k) { return power(f, b, static_cast<unsigned long>(k)); };
  return {pw(nq, e[2]) * pw(nqi, e[1]), pw(nqi, e[2]) / pw(nqi, e[0]), f.one() / (pw(nq, e[0]) * pw(nqi, e[1]))};
}

template <Field F>
bool skew_is_central(const F& f, const std::array<unsigned, 3>& e, const typename F::Element& q) {
  for (const auto& s : commutation_scalars(f, e, q))
    if (!f.equal(s, f.one())) return false;
  return true;
}

/// Centrality by comparing normal forms of M g and g M for each generator.
template <Field F>
bool skew_is_central_by_rewriting(const F& f, const std::array<unsigned, 3>& e, const typename F::Element& q) {
  const Word m = monomial_word(e);
  for (Gen g : all_generators) {
    const auto left = skew_normal_form(f, Word{g} * m, q);
    const auto right = skew_normal_form(f, m * Word{g}, q);
    if (!f.equal(left.coefficient, right.coefficient)) return false;
  }
  return true;
}

/// Least k >= 1 with q^k = 1, up to bound; nullopt otherwise.
template <Field F>
std::optional<unsigned> multiplicative_order(const F& f, const typename F::Element& q, unsigned bound) {
  typename F::Element p = q;
  for (unsigned k = 1; k <= bound; ++k) {
    if (f.equal(p, f.one())) return k;
    p = p * q;
  }
  return std::nullopt;
}

template <Field F>
struct SkewCenterReport {
  typename F::Element q;
  unsigned q_order = 0;
  /// |sigma| for (1,q,0)
  unsigned m = 0;
  std::vector<std::array<unsigned, 3>> central_monomials;
  /// (xyz)^m = kappa x^m y^m z^m
  typename F::Element kappa;
  bool relation_holds = false;
  /// normal form of g(1,q,0) is g_scalar * xyz
  typename F::Element g_scalar;
  bool g_normal_form_is_xyz_multiple = false;
  bool xyz_central = false;
  /// x^m, y^m, z^m central
  bool powers_central_at_m = false;
  /// x^k, y^k, z^k central for k = order of q
  bool powers_central_at_q_order = false;
  unsigned kappa_order = 0;
  bool kappa_order_divides = false;
};

template <Field F>
SkewCenterReport<F> skew_center_report(const F& f, const typename F::Element& q, unsigned max_degree) {
  if (f.is_zero(q)) throw PreconditionError("q must be nonzero");
  unsigned bound = 2;
  if constexpr (F::is_exact) bound = static_cast<unsigned>(std::lcm(2, f.order()));
  else bound = 1000;
  const auto qo = multiplicative_order(f, q, bound);
  if (!qo) throw PreconditionError("q is not a root of unity");

  SkewCenterReport<F> r;
  r.q = q;
  r.q_order = *qo;
  const ParameterTriple<F> params(f, f.one(), q, f.zero());
  const SigmaOrder so = sigma_order(params);
  if (!so.order) throw Error("order of sigma for (1,q,0) exceeds the search bound");
  r.m = *so.order;

  for (unsigned d = 0; d <= max_degree; ++d)
    for (unsigned a = 0; a <= d; ++a)
      for (unsigned b = 0; a + b <= d; ++b) {
        const std::array<unsigned, 3> e{a, b, d - a - b};
        if (skew_is_central(f, e, q)) r.central_monomials.push_back(e);
      }

  const Word xyz = Word::parse("xyz");
  Word power_word;
  for (unsigned k = 0; k < r.m; ++k) power_word = power_word * xyz;
  r.kappa = skew_normal_form(f, power_word, q).coefficient;
  const auto sign = (r.m % 2 == 0) ? f.one() : -f.one();
  r.relation_holds = f.is_zero(sign * r.kappa + f.one());

  const auto gnf = skew_normal_form(central_g(params), q);
  r.g_scalar = f.zero();
  r.g_normal_form_is_xyz_multiple = true;
  for (const auto& [e, c] : gnf) {
    if (e == std::array<unsigned, 3>{1, 1, 1})
      r.g_scalar = c;
    else
      r.g_normal_form_is_xyz_multiple = false;
  }
  r.xyz_central = skew_is_central(f, {1, 1, 1}, q);
  auto powers_central = [&](unsigned k) {
    return skew_is_central(f, {k, 0, 0}, q) && skew_is_central(f, {0, k, 0}, q) && skew_is_central(f, {0, 0, k}, q);
  };
  r.powers_central_at_m = powers_central(r.m);
  r.powers_central_at_q_order = powers_central(r.q_order);
  const unsigned lim = static_cast<unsigned>(std::lcm(2u, r.q_order));
  r.kappa_order = multiplicative_order(f, r.kappa, lim).value_or(0);
  r.kappa_order_divides = r.kappa_order != 0 && lim % r.kappa_order == 0;
  return r;
}

struct InvariantRingCheck {
  bool ok = true;
  unsigned n = 0;
  unsigned max_degree = 0;
  std::size_t invariant_count = 0;
  std::optional<std::array<unsigned, 3>> witness;
};

/// Weights of x^e under diag(v,1,v^-1) and diag(v,v^-1,1), mod n.
inline std::array<unsigned, 2> invariant_weights(const std::array<unsigned, 3>& e, unsigned n) {
  auto mod = [n](long v) { return static_cast<unsigned>(((v % static_cast<long>(n)) + n) % n); };
  return {mod(static_cast<long>(e[0]) - static_cast<long>(e[2])), mod(static_cast<long>(e[0]) - static_cast<long>(e[1]))};
}

/// e = k(1,1,1) + n * (nonnegative vector) for some k.
inline bool in_invariant_semigroup(const std::array<unsigned, 3>& e, unsigned n) {
  const unsigned lo = std::min({e[0], e[1], e[2]});
  for (unsigned k = 0; k <= lo; ++k)
    if ((e[0] - k) % n == 0 && (e[1] - k) % n == 0 && (e[2] - k) % n == 0) return true;
  return false;
}

inline InvariantRingCheck invariant_ring_check(unsigned n, unsigned max_degree) {
  if (n == 0) throw PreconditionError("n must be positive");
  InvariantRingCheck r;
  r.n = n;
  r.max_degree = max_degree;
  for (unsigned d = 0; d <= max_degree; ++d)
    for (unsigned a = 0; a <= d; ++a)
      for (unsigned b = 0; a + b <= d; ++b) {
        const std::array<unsigned, 3> e{a, b, d - a - b};
        const auto w = invariant_weights(e, n);
        if (w[0] != 0 || w[1] != 0) continue;
        ++r.invariant_count;
        if (!in_invariant_semigroup(e, n)) {
          r.ok = false;
          if (!r.witness) r.witness = e;
        }
      }
  return r;
}

struct ShatCenterCheck {
  bool ok = true;
  std::vector<std::pair<std::string, bool>> elements;
  /// xy must come out non-central
  bool control_noncentral = false;
};

/// g and the degree-6 elements u1, u2, u3 of S(1,-1,-1).
inline std::vector<std::pair<std::string, NcPoly<CyclotomicField>>> shat_center_elements() {
  const CyclotomicField q(1);
  return {{"g", parse_ncpoly("xxx - yxz", q)},
          {"u1", parse_ncpoly("yxxyxz + xyxyxz + xxyxyz + xxxyxx + xxxxyx", q)},
          {"u2", parse_ncpoly("yxxxxy - xyxxyx + xxyxyx - 2*xxyxxy - xxxyxy", q)},
          {"u3", parse_ncpoly("xxxyxz", q)}};
}

inline ShatCenterCheck shat_center_check() {
  const CyclotomicField q(1);
  const auto params = ParameterTriple<CyclotomicField>::of_ints(q, 1, -1, -1);
  const GradedTruncation<CyclotomicField> s7(q, relation_list(params), 7);
  ShatCenterCheck r;
  for (const auto& [name, p] : shat_center_elements()) {
    const bool central = s7.is_central(p);
    r.elements.emplace_back(name, central);
    r.ok = r.ok && central;
  }
  r.control_noncentral = !s7.is_central(parse_ncpoly("xy", q));
  return r;
}

template <Field F>
struct PiReport {
  SigmaOrder sigma;
  std::optional<unsigned> pi_degree;
  std::optional<unsigned> b_pi_degree;
  std::optional<DimensionBounds> bounds;
  /// a = b: S has rank 2^2 over its center
  bool rank_four_over_center = false;
  bool smooth = false;
};

template <Field F>
PiReport<F> pi_report(const ParameterTriple<F>& params, const SigmaOrderOptions& opt = {}) {
  const auto cls = classify_params(params, opt);
  PiReport<F> r;
  r.sigma = cls.sigma;
  r.smooth = cls.is_sklyanin() && cls.curve == CurveClass::smooth_cubic;
  if (r.smooth && cls.sigma.order) {
    r.pi_degree = *cls.sigma.order;
    r.b_pi_degree = *cls.sigma.order;
    r.bounds = dimension_bounds(*cls.sigma.order);
  }
  r.rank_four_over_center = r.smooth && params.field().equal(params.a(), params.b());
  return r;
}

} // namespace skly3
