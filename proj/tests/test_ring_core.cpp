#include <random>

#include <gtest/gtest.h>

#include "linkalg/errors.hpp"
#include "linkalg/polynomial.hpp"

using namespace linkalg;

namespace {

RingPtr xyz() { return Ring::from_list("x,y,z"); }

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring) {
  std::vector<Term> terms;
  int count = static_cast<int>(rng() % 5);
  for (int k = 0; k < count; ++k) {
    Monomial m(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) m[i] = static_cast<Exponent>(rng() % 3);
    long num = static_cast<long>(rng() % 11) - 5;
    long den = static_cast<long>(rng() % 4) + 1;
    terms.push_back({m, Rational(num, den)});
  }
  for (auto& t : terms) t.coeff.canonicalize();
  return Polynomial(ring, terms);
}

}  // namespace

TEST(Parse, DirectReading) {
  auto R = xyz();
  auto f = parse_poly("x^2*y - 3*z", R);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.terms()[0].mono, (Monomial{2, 1, 0}));
  EXPECT_EQ(f.terms()[0].coeff, 1);
  EXPECT_EQ(f.terms()[1].mono, (Monomial{0, 0, 1}));
  EXPECT_EQ(f.terms()[1].coeff, -3);
}

TEST(Parse, ZeroAndNormalization) {
  auto R = xyz();
  EXPECT_TRUE(parse_poly("0", R).is_zero());
  auto f = parse_poly("x + x", R);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.lead_coeff(), 2);
}

TEST(Parse, ImplicitMultiplicationAndRationals) {
  auto R = xyz();
  EXPECT_EQ(parse_poly("3x^2 y", R), parse_poly("3*x^2*y", R));
  EXPECT_EQ(parse_poly("(x+y)(x-y)", R), parse_poly("x^2 - y^2", R));
  EXPECT_EQ(parse_poly("1/2*x", R).lead_coeff(), Rational(1, 2));
  EXPECT_EQ(parse_poly("-(x - 2/4)", R), parse_poly("1/2 - x", R));
}

TEST(Parse, Errors) {
  auto R = xyz();
  EXPECT_THROW(parse_poly("w + 1", R), InputError);
  EXPECT_THROW(parse_poly("x +* y", R), InputError);
  EXPECT_THROW(parse_poly("x/0", R), InputError);
  EXPECT_THROW(parse_poly("x^y", R), InputError);
  EXPECT_THROW(parse_poly("(x", R), InputError);
  EXPECT_THROW(parse_poly("", R), InputError);
}

TEST(Ring, Validation) {
  EXPECT_THROW(Ring::from_list("x,x"), InputError);
  EXPECT_THROW(Ring::from_list(""), InputError);
  EXPECT_THROW(Ring::from_list("x,1y"), InputError);
  EXPECT_EQ(Ring::from_list(" a , b ")->nvars(), 2u);
}

TEST(Arithmetic, Examples) {
  auto R = xyz();
  auto x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  EXPECT_EQ((x + y) * (x - y), parse_poly("x^2 - y^2", R));
  auto f = parse_poly("x^3 - 2*y*z + 7", R);
  EXPECT_EQ(f + Polynomial(R), f);
  EXPECT_EQ(parse_poly("1/2*x", R) * parse_poly("2/3*x", R), parse_poly("1/3*x^2", R));
}

TEST(Arithmetic, ContextMismatch) {
  auto R = xyz();
  auto S = Ring::from_list("x,y");
  EXPECT_THROW(Polynomial::variable(R, 0) + Polynomial::variable(S, 0), PreconditionError);
}

TEST(Monomials, Operations) {
  Monomial x2y{2, 1, 0}, yz{0, 1, 1}, x{1, 0, 0}, y{0, 1, 0};
  EXPECT_EQ(x2y.lcm(yz), (Monomial{2, 1, 1}));
  EXPECT_TRUE(x.divides(x2y));
  EXPECT_EQ(x2y.quotient(x), (Monomial{1, 1, 0}));
  EXPECT_TRUE((Monomial{2, 0, 0}).gcd(y).is_one());
  EXPECT_THROW(y.quotient(x), PreconditionError);
}

TEST(Properties, RoundTripAndRingAxioms) {
  auto R = xyz();
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_poly(rng, R), g = random_poly(rng, R), h = random_poly(rng, R);
    EXPECT_EQ(parse_poly(f.to_string(), R), f) << f.to_string();
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ(f + g, g + f);
    EXPECT_TRUE((f - f).is_zero());
  }
}

TEST(Properties, OrderAxioms) {
  std::mt19937_64 rng(7);
  for (auto ord : {MonomialOrder::lex(), MonomialOrder::degrevlex(), MonomialOrder::block(1)}) {
    for (int trial = 0; trial < 500; ++trial) {
      Monomial u(3), v(3), w(3);
      for (int i = 0; i < 3; ++i) {
        u[i] = rng() % 4;
        v[i] = rng() % 4;
        w[i] = rng() % 4;
      }
      EXPECT_LE(ord.compare(Monomial(3), u), 0);
      int c = ord.compare(u, v);
      EXPECT_EQ(ord.compare(u * w, v * w), c);
      EXPECT_EQ(ord.compare(v, u), -c);
      if (u.divides(v)) EXPECT_LE(c, 0);
    }
  }
}

TEST(Division, Exact) {
  auto R = xyz();
  auto g = parse_poly("x - y", R);
  auto h = parse_poly("x^2 - y^2", R);
  EXPECT_EQ(exact_divide(h, g), parse_poly("x + y", R));
  EXPECT_THROW(exact_divide(parse_poly("x^2 + y", R), g), PreconditionError);
}
