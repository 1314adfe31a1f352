#include "skly3/center_pi.hpp"
#include "printers.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace skly3;

namespace {

using Exps = std::array<unsigned, 3>;

struct QCase {
  int m;
  long k;
};

std::vector<QCase> q_cases() { return {{1, 0}, {3, 1}, {4, 1}, {6, 1}, {12, 5}}; }

Word random_word(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<std::uint64_t> idx(0, static_cast<std::uint64_t>(std::pow(3, len)) - 1);
  return Word::from_index(idx(rng), len);
}

std::set<Exps> semigroup(unsigned n, unsigned max_degree) {
  std::set<Exps> out{{0, 0, 0}};
  const std::vector<Exps> gens{{n, 0, 0}, {0, n, 0}, {0, 0, n}, {1, 1, 1}};
  std::vector<Exps> frontier{{0, 0, 0}};
  while (!frontier.empty()) {
    std::vector<Exps> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        const Exps s{e[0] + g[0], e[1] + g[1], e[2] + g[2]};
        if (s[0] + s[1] + s[2] <= max_degree && out.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  return out;
}

bool invariant_under_group(const Exps& e, unsigned n) {
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      // diag(v, 1, v^-1)^i diag(v, v^-1, 1)^j = diag(v^(i+j), v^-j, v^-i)
      const long w = static_cast<long>((i + j) * e[0]) - static_cast<long>(j * e[1]) - static_cast<long>(i * e[2]);
      if (((w % static_cast<long>(n)) + n) % n != 0) return false;
    }
  return true;
}

} // namespace

TEST(SkewRing, SwapRules) {
  const CyclotomicField K(4);
  const auto q = K.zeta(1);
  EXPECT_EQ(skew_normal_form(K, Word::parse("yx"), q).coefficient, -(K.one() / q));
  EXPECT_EQ(skew_normal_form(K, Word::parse("zy"), q).coefficient, -(K.one() / q));
  EXPECT_EQ(skew_normal_form(K, Word::parse("zx"), q).coefficient, -q);
  EXPECT_EQ(skew_normal_form(K, Word::parse("xyz"), q).coefficient, K.one());
  const auto m = skew_normal_form(K, Word::parse("zyx"), q);
  EXPECT_EQ(m.exponents, (Exps{1, 1, 1}));
}

TEST(SkewRing, NormalFormAgreesWithIdealMembership) {
  std::mt19937_64 rng(5);
  for (const auto& qc : q_cases()) {
    const CyclotomicField K(qc.m);
    const auto q = qc.m == 1 ? K.one() : K.zeta(qc.k);
    const ParameterTriple<CyclotomicField> p(K, K.one(), q, K.zero());
    const GradedTruncation<CyclotomicField> s(K, relation_list(p), 6);
    for (int t = 0; t < 15; ++t) {
      const Word w = random_word(rng, 1 + t % 6);
      const auto nf = skew_normal_form(K, w, q);
      auto diff = NcPoly<CyclotomicField>::monomial(K, w) -
                  NcPoly<CyclotomicField>::monomial(K, monomial_word(nf.exponents), nf.coefficient);
      EXPECT_TRUE(s.contains(diff)) << w.to_string();
    }
  }
}

TEST(SkewRing, RewritingIsConfluent) {
  std::mt19937_64 rng(99);
  for (const auto& qc : q_cases()) {
    const CyclotomicField K(qc.m);
    const auto q = qc.m == 1 ? K.one() : K.zeta(qc.k);
    for (int t = 0; t < 40; ++t) {
      const Word w = random_word(rng, 1 + t % 10);
      const auto a = skew_normal_form(K, w, q);
      const auto b = skew_normal_form_random(K, w, q, rng);
      EXPECT_EQ(a.exponents, b.exponents);
      EXPECT_EQ(a.coefficient, b.coefficient) << w.to_string();
    }
  }
}

TEST(SkewRing, CommutationScalarsMatchRewriting) {
  for (const auto& qc : q_cases()) {
    const CyclotomicField K(qc.m);
    const auto q = qc.m == 1 ? K.one() : K.zeta(qc.k);
    for (unsigned d = 0; d <= 6; ++d)
      for (unsigned a = 0; a <= d; ++a)
        for (unsigned b = 0; a + b <= d; ++b) {
          const Exps e{a, b, d - a - b};
          EXPECT_EQ(skew_is_central(K, e, q), skew_is_central_by_rewriting(K, e, q)) << qc.m << " " << a << b << d - a - b;
        }
  }
}

TEST(SkewCenter, QEqualsOne) {
  const CyclotomicField Q(1);
  const auto r = skew_center_report(Q, Q.one(), 4);
  EXPECT_EQ(r.m, 2u);
  std::set<Exps> expected;
  for (unsigned d = 0; d <= 4; ++d)
    for (unsigned a = 0; a <= d; ++a)
      for (unsigned b = 0; a + b <= d; ++b) {
        const unsigned c = d - a - b;
        if (a % 2 == b % 2 && b % 2 == c % 2) expected.insert({a, b, c});
      }
  EXPECT_EQ(std::set<Exps>(r.central_monomials.begin(), r.central_monomials.end()), expected);
  EXPECT_EQ(r.kappa, -Q.one());
  EXPECT_TRUE(r.relation_holds);
  EXPECT_TRUE(r.g_normal_form_is_xyz_multiple);
  EXPECT_TRUE(r.xyz_central);
  EXPECT_TRUE(r.powers_central_at_m);
}

TEST(SkewCenter, CentralityAgreesWithTruncation) {
  const CyclotomicField Q(1);
  const auto p = ParameterTriple<CyclotomicField>::of_ints(Q, 1, 1, 0);
  const GradedTruncation<CyclotomicField> s(Q, relation_list(p), 5);
  for (unsigned d = 1; d <= 4; ++d)
    for (unsigned a = 0; a <= d; ++a)
      for (unsigned b = 0; a + b <= d; ++b) {
        const Exps e{a, b, d - a - b};
        EXPECT_EQ(skew_is_central(Q, e, Q.one()), s.is_central(NcPoly<CyclotomicField>::monomial(Q, monomial_word(e))));
      }
}

TEST(SkewCenter, RootsOfUnity) {
  for (int m : {3, 4}) {
    const CyclotomicField K(m);
    const auto r = skew_center_report(K, K.zeta(1), 6);
    EXPECT_TRUE(r.powers_central_at_m) << m;
    EXPECT_TRUE(r.xyz_central) << m;
    EXPECT_FALSE(r.kappa.is_zero());
    EXPECT_TRUE(r.kappa_order_divides) << m;
    EXPECT_EQ(skew_normal_form(K, Word::parse(std::string(3 * r.m, 'x')), K.zeta(1)).exponents,
              (Exps{3 * r.m, 0, 0}));
  }
}

TEST(SkewCenter, RejectsNonRootsOfUnity) {
  const CyclotomicField Q(1);
  EXPECT_THROW(skew_center_report(Q, Q.from_int(2), 3), PreconditionError);
  EXPECT_THROW(skew_center_report(Q, Q.zero(), 3), PreconditionError);
}

TEST(MultiplicativeOrder, Basics) {
  const CyclotomicField K(12);
  EXPECT_EQ(multiplicative_order(K, K.zeta(1), 24), 12u);
  EXPECT_EQ(multiplicative_order(K, K.zeta(4), 24), 3u);
  EXPECT_EQ(multiplicative_order(K, -K.one(), 24), 2u);
  EXPECT_FALSE(multiplicative_order(K, K.from_int(2), 24));
}

TEST(InvariantRing, MatchesSemigroupAndGroupAction) {
  for (unsigned n : {1u, 2u, 3u, 4u}) {
    const auto r = invariant_ring_check(n, 3 * n);
    EXPECT_TRUE(r.ok) << n;
    const auto sg = semigroup(n, 3 * n);
    std::size_t invariants = 0;
    for (unsigned d = 0; d <= 3 * n; ++d)
      for (unsigned a = 0; a <= d; ++a)
        for (unsigned b = 0; a + b <= d; ++b) {
          const Exps e{a, b, d - a - b};
          const bool inv = invariant_under_group(e, n);
          invariants += inv;
          EXPECT_EQ(inv, sg.count(e) == 1) << n;
          EXPECT_EQ(inv, in_invariant_semigroup(e, n));
        }
    EXPECT_EQ(r.invariant_count, invariants);
  }
}

TEST(Shat, CenterElements) {
  const auto r = shat_center_check();
  EXPECT_TRUE(r.ok);
  for (const auto& [name, central] : r.elements) EXPECT_TRUE(central) << name;
  EXPECT_TRUE(r.control_noncentral);
}

TEST(PiDegree, Reports) {
  const CyclotomicField Q(1);
  const auto a = pi_report(ParameterTriple<CyclotomicField>::of_ints(Q, 1, 1, 7));
  EXPECT_EQ(a.pi_degree, 2u);
  EXPECT_EQ(a.b_pi_degree, 2u);
  EXPECT_TRUE(a.rank_four_over_center);
  const auto b = pi_report(ParameterTriple<CyclotomicField>::of_ints(Q, 1, -1, -1));
  EXPECT_EQ(b.pi_degree, 6u);
  const auto c = pi_report(ParameterTriple<CyclotomicField>::of_ints(Q, 1, 2, 3));
  EXPECT_FALSE(c.pi_degree);
}
