#include <gtest/gtest.h>

#include "linkalg/errors.hpp"
#include "linkalg/invariants.hpp"
#include "oracles.hpp"

using namespace linkalg;

namespace {

RingPtr xy() { return Ring::from_list("x,y"); }
CyclicModule M(const std::string& s, const RingPtr& R) { return CyclicModule(Ideal::parse(s, R)); }
MonomialIdeal mono(std::size_t n, std::vector<Monomial> g) { return MonomialIdeal(n, std::move(g)); }
MonomialPrime P(std::size_t n, std::vector<std::size_t> idx) { return MonomialPrime::from_indices(n, idx); }

RingPtr ring_of(std::size_t n) {
  static const std::vector<std::string> names{"a", "b", "c", "d", "e"};
  return Ring::make(std::vector<std::string>(names.begin(), names.begin() + n));
}

}  // namespace

TEST(Assh, Examples) {
  auto R = xy();
  EXPECT_EQ(assh(M("x*y", R)), PrimeSet({P(2, {0}), P(2, {1})}));
  EXPECT_EQ(assh(M("x^2, x*y", R)), PrimeSet({P(2, {0})}));
  EXPECT_EQ(assh(CyclicModule::free(R)), PrimeSet({MonomialPrime(2, 0)}));
}

TEST(AttTop, Examples) {
  auto R = xy();
  EXPECT_EQ(att_top_H(MonomialIdeal::maximal(2), CyclicModule::free(R)), PrimeSet({MonomialPrime(2, 0)}));
  EXPECT_TRUE(att_top_H(mono(2, {{1, 0}}), CyclicModule::free(R)).empty());
  EXPECT_EQ(att_top_H(mono(2, {{1, 0}}), M("x*y", R)), PrimeSet({P(2, {1})}));
  // general ideal path agrees on a non-monomial a
  EXPECT_EQ(att_top_H(Ideal::parse("x + y", R), M("x*y", R)), PrimeSet({P(2, {0}), P(2, {1})}));
  EXPECT_EQ(att_top_H(Ideal::parse("x", R), M("x*y", R)), PrimeSet({P(2, {1})}));
}

TEST(AttTopViaCd, Examples) {
  auto R = xy();
  EXPECT_EQ(att_top_H_via_cd(MonomialIdeal::maximal(2), CyclicModule::free(R)), PrimeSet({MonomialPrime(2, 0)}));
  EXPECT_EQ(att_top_H_via_cd(mono(2, {{1, 0}}), M("x*y", R)), PrimeSet({P(2, {1})}));
  EXPECT_TRUE(att_top_H_via_cd(mono(2, {{1, 0}}), CyclicModule::free(R)).empty());
  EXPECT_THROW(att_top_H_via_cd(mono(2, {{2, 0}}), CyclicModule::free(R)), PreconditionError);
}

TEST(AssF0, Examples) {
  auto R = xy();
  auto N = M("x^2, x*y", R);
  EXPECT_EQ(ass_F0(MonomialIdeal::maximal(2), N), associated_primes(N.monomial()));
  EXPECT_EQ(ass_F0(mono(2, {{1, 0}}), N), PrimeSet({P(2, {0, 1})}));
  EXPECT_TRUE(ass_F0(mono(2, {{1, 0}}), CyclicModule::free(R)).empty());
}

TEST(HtM, Examples) {
  auto R = xy();
  EXPECT_EQ(ht_M(P(2, {0, 1}), CyclicModule::free(R)), 2);
  EXPECT_EQ(ht_M(P(2, {0}), CyclicModule::free(R)), 1);
  EXPECT_EQ(ht_M(P(2, {0, 1}), M("x*y", R)), 1);
  EXPECT_EQ(ht_M(P(2, {0}), M("x", R)), 0);
  EXPECT_THROW(ht_M(P(2, {1}), M("x", R)), PreconditionError);
}

TEST(Equidimensional, Examples) {
  auto R3 = Ring::from_list("x,y,z");
  EXPECT_TRUE(is_equidimensional(M("x*y", xy())));
  EXPECT_TRUE(is_equidimensional(M("x", xy())));
  EXPECT_FALSE(is_equidimensional(M("x*y, x*z", R3)));
}

TEST(Invariants, RandomProperties) {
  oracle::MonomialSampler s(77);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 1 + trial % 4;
    auto R = ring_of(n);
    CyclicModule Mod(Ideal::from_monomial(s.ideal(n, 2, 3), R));
    auto a = s.ideal(n, 2, 3);
    auto sq = mono_radical(a);
    auto att = att_top_H(a, Mod);
    EXPECT_EQ(att, att_top_H(sq, Mod));
    EXPECT_EQ(att, att_top_H_via_cd(sq, Mod));
    EXPECT_TRUE(att.subset_of(assh(Mod)));
    EXPECT_TRUE(assh(Mod).subset_of(ass(Mod)));
    EXPECT_TRUE(ass_F0(a, Mod).subset_of(ass(Mod)));
    EXPECT_EQ(att_top_H(MonomialIdeal::maximal(n), Mod), assh(Mod));
    EXPECT_EQ(ass_F0(MonomialIdeal::maximal(n), Mod), ass(Mod));
    // radical-membership path agrees with monomial radicals
    if (trial % 5 == 0)
      for (const auto& p : ass(Mod)) EXPECT_EQ(reaches_maximal(Ideal::from_monomial(a, R), p), reaches_maximal(a, p));
  }
}
