#include <gtest/gtest.h>

#include "linkalg/errors.hpp"
#include "linkalg/gb_engine.hpp"
#include "linkalg/groebner.hpp"
#include "oracles.hpp"

using namespace linkalg;

namespace {

RingPtr xy() { return Ring::from_list("x,y"); }
Ideal I(const std::string& s, const RingPtr& R) { return Ideal::parse(s, R); }

/// Every element of `gens` lies in the ideal spanned by `basis` and vice versa.
bool same_ideal(const Ideal& a, const Ideal& b) { return a.contains(b) && b.contains(a); }

}  // namespace

TEST(ReducedGB, Trivial) {
  auto R = xy();
  auto g = I("x", R).gb();
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0], parse_poly("x", R));
  auto h = I("x - y, y", R).gb();
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h[0], parse_poly("x", R));
  EXPECT_EQ(h[1], parse_poly("y", R));
  EXPECT_TRUE(Ideal::zero(R).gb().empty());
}

TEST(ReducedGB, SPairOracle) {
  auto R = xy();
  auto J = I("x^2 + y^2, x*y", R);
  auto basis = J.gb();
  EXPECT_TRUE(satisfies_spair_criterion(basis));
  std::vector<gb::Vec> vecs;
  for (const auto& b : basis) vecs.push_back(gb::from_polynomial(b));
  for (const auto& g : J.gens()) EXPECT_TRUE(gb::normal_form(gb::from_polynomial(g), vecs, R->order()).empty());
  // monic, and no term of one element is divisible by another's lead
  for (std::size_t i = 0; i < basis.size(); ++i) {
    EXPECT_EQ(basis[i].lead_coeff(), 1);
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (i != j)
        for (const auto& t : basis[i].terms()) EXPECT_FALSE(basis[j].lead_monomial().divides(t.mono));
  }
}

TEST(ReducedGB, Idempotent) {
  auto R = Ring::from_list("x,y,z");
  auto J = I("x^2*y - z^3, x*y*z - y^2, x^3 - z", R);
  auto g1 = J.gb();
  Ideal again(R, g1);
  EXPECT_EQ(again.gb(), g1);
  EXPECT_TRUE(satisfies_spair_criterion(g1));
}

TEST(ReducedGB, OtherOrders) {
  auto R = xy();
  auto J = I("x^2 + y, x*y - 1", R);
  auto lex = reduced_gb(J, MonomialOrder::lex());
  EXPECT_TRUE(satisfies_spair_criterion(lex));
  EXPECT_EQ(lex.back().ring()->order(), MonomialOrder::lex());
}

TEST(ReducedGB, Budget) {
  auto R = Ring::from_list("x,y,z");
  std::vector<gb::Vec> gens;
  for (auto s : {"x^3 - y*z^2 + 1", "y^3 - x^2*z", "z^3 - x*y + y"}) gens.push_back(gb::from_polynomial(parse_poly(s, R)));
  gb::Options opts;
  opts.spair_budget = 2;
  EXPECT_THROW(gb::reduced_basis(gens, R->order(), opts), ResourceError);
}

TEST(Membership, Examples) {
  auto R = xy();
  EXPECT_TRUE(ideal_member(parse_poly("x^2*y", R), I("x", R)));
  EXPECT_FALSE(ideal_member(parse_poly("x", R), I("x^2", R)));
  auto J = I("x^2 + y^2, x*y", R);
  auto f = parse_poly("x + y", R);
  EXPECT_FALSE(ideal_member(f, J));
  EXPECT_FALSE(oracle::member_up_to_degree(f, J.gens(), 4));
  auto g = parse_poly("x^3", R);  // x^3 = x(x^2+y^2) - y(xy)
  EXPECT_TRUE(ideal_member(g, J));
  EXPECT_TRUE(oracle::member_up_to_degree(g, J.gens(), 3));
}

TEST(Intersect, Examples) {
  auto R = xy();
  EXPECT_TRUE(ideal_intersect(I("x", R), I("y", R)).equals(I("x*y", R)));
  auto J = I("x^2 + y, x*y - y^2", R);
  EXPECT_TRUE(ideal_intersect(J, J).equals(J));
  auto K = ideal_intersect(I("x^2, y", R), I("x", R));
  EXPECT_TRUE(K.equals(I("x^2, x*y", R)));
  // brute-force: monomials up to degree 4 in both ideals are exactly those in K
  std::vector<Monomial> a{{2, 0}, {0, 1}}, b{{1, 0}};
  for (const auto& m : oracle::monomials_up_to(2, 4)) {
    bool both = oracle::in_monomial_ideal(m, a) && oracle::in_monomial_ideal(m, b);
    EXPECT_EQ(K.contains(Polynomial::monomial(R, m)), both);
  }
}

TEST(Quotient, Examples) {
  auto R = xy();
  EXPECT_TRUE(ideal_quotient(I("x*y", R), I("x", R)).equals(I("y", R)));
  auto J = I("x^2 + y^3, x*y", R);
  EXPECT_TRUE(ideal_quotient(J, Ideal::unit(R)).equals(J));
  auto Q = ideal_quotient(I("x^2, x*y", R), I("x", R));
  EXPECT_TRUE(Q.equals(I("x, y", R)));
  // colon oracle: m ∈ I:(x) iff m*x divisible by a generator
  std::vector<Monomial> gens{{2, 0}, {1, 1}};
  for (const auto& m : oracle::monomials_up_to(2, 4))
    EXPECT_EQ(Q.contains(Polynomial::monomial(R, m)), oracle::in_monomial_ideal(m * Monomial{1, 0}, gens));
}

TEST(Quotient, ProductLandsInside) {
  auto R = Ring::from_list("x,y,z");
  auto A = I("x^2 - y*z, x*y*z", R);
  auto B = I("x + z, y^2", R);
  auto Q = ideal_quotient(A, B);
  EXPECT_TRUE(A.contains(ideal_product(Q, B)));
}

TEST(Saturate, Examples) {
  auto R = xy();
  auto x = parse_poly("x", R), y = parse_poly("y", R);
  EXPECT_TRUE(saturate(I("x^2*y", R), x).equals(I("y", R)));
  EXPECT_TRUE(saturate(I("x", R), y).equals(I("x", R)));
  auto S = saturate(I("x^2, x*y", R), x);
  EXPECT_TRUE(S.is_unit());
  EXPECT_THROW(saturate(I("x", R), Polynomial(R)), PreconditionError);
}

TEST(Radical, Examples) {
  auto R = xy();
  EXPECT_TRUE(radical_member(parse_poly("x", R), I("x^2", R)));
  EXPECT_FALSE(radical_member(parse_poly("y", R), I("x^2", R)));
  auto J = I("(x+y)^3, x*y*(x+y)", R);
  auto f = parse_poly("x + y", R);
  EXPECT_TRUE(radical_member(f, J));
  bool some_power = false;
  for (unsigned k = 1; k <= 5 && !some_power; ++k) some_power = J.contains(f.pow(k));
  EXPECT_TRUE(some_power);
  EXPECT_FALSE(radical_member(parse_poly("x", R), J));
}

TEST(Eliminate, Examples) {
  auto R = xy();
  auto E1 = eliminate(I("x - y", R), {0});
  EXPECT_EQ(E1.ring()->names(), std::vector<std::string>{"y"});
  EXPECT_TRUE(E1.is_zero() || E1.gb().empty());
  auto E2 = eliminate(I("x, y", R), {0});
  EXPECT_TRUE(E2.equals(Ideal::parse("y", E2.ring())));
  auto T = Ring::from_list("t,x,y");
  auto E3 = eliminate(Ideal::parse("t*x - 1, t*y", T), {0});
  auto expect = Ideal::parse("y", E3.ring());
  EXPECT_TRUE(E3.contains(expect) && expect.contains(E3));
  EXPECT_THROW(eliminate(I("x", R), {0, 1}), PreconditionError);
}

TEST(Properties, AgreeWithMonomialAlgorithms) {
  oracle::MonomialSampler s(2024);
  auto R = Ring::from_list("a,b,c,d");
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + trial % 3;
    auto ring = n == 4 ? R : Ring::from_list(n == 2 ? "a,b" : "a,b,c");
    auto A = s.ideal(n, 3, 3), B = s.ideal(n, 3, 3);
    auto GA = Ideal::from_monomial(A, ring), GB = Ideal::from_monomial(B, ring);
    auto inter = ideal_intersect(GA, GB);
    auto colon = ideal_quotient(GA, GB);
    EXPECT_EQ(inter.as_monomial(), mono_intersect(A, B));
    EXPECT_EQ(colon.as_monomial(), mono_colon(A, B));
    for (const auto& g : inter.gens()) EXPECT_TRUE(GA.contains(g) && GB.contains(g));
    for (const auto& g : GA.gens())
      for (const auto& h : GB.gens()) EXPECT_TRUE(inter.contains(g * h));
    EXPECT_TRUE(GA.contains(ideal_product(colon, GB)));
    EXPECT_TRUE(same_ideal(inter, Ideal::from_monomial(mono_intersect(A, B), ring)));
  }
}
