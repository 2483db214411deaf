#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "qtower/scalar.hpp"

using namespace qtower;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int terms, int span) {
  std::uniform_int_distribution<int> e(-span, span);
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<LaurentTerm> t;
  for (int i = 0; i < terms; ++i) t.push_back({e(rng), e(rng) / 2, Integer(c(rng))});
  return LaurentPoly::from_terms(t);
}

Scalar random_sym(std::mt19937_64& rng) {
  LaurentPoly den;
  do {
    den = random_poly(rng, 2, 3);
  } while (den.is_zero());
  return Scalar::symbolic(random_poly(rng, 3, 4), den);
}

}  // namespace

TEST(IntegerTest, OverflowPromotesToBig) {
  Integer a(std::numeric_limits<long long>::max());
  Integer b = a + Integer(1);
  EXPECT_FALSE(b.is_small());
  EXPECT_EQ(b.str(), "9223372036854775808");
  EXPECT_TRUE((b - Integer(1)).is_small());
  Integer sq = b * b;
  EXPECT_EQ(Integer::div_exact(sq, b), b);
  EXPECT_THROW(Integer::div_exact(sq + Integer(1), b), std::domain_error);
}

TEST(IntegerTest, GcdAndPow) {
  EXPECT_EQ(Integer::gcd(Integer(-12), Integer(18)), Integer(6));
  EXPECT_EQ(Integer::pow(Integer(3), 40).str(), "12157665459056928801");
}

TEST(RationalTest, ReducesAndParses) {
  Rational r = Rational::parse("6/-4");
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r * Rational(2, 3), Rational(-1));
  EXPECT_EQ(Rational::pow(Rational(2, 3), -2), Rational(9, 4));
}

TEST(LaurentTest, GcdRecoversCommonFactor) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPoly g = random_poly(rng, 3, 3);
    LaurentPoly a = random_poly(rng, 3, 3);
    LaurentPoly b = random_poly(rng, 2, 3);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    LaurentPoly d = LaurentPoly::gcd(g * a, g * b);
    // g divides the computed gcd, and the gcd divides both inputs.
    EXPECT_NO_THROW(LaurentPoly::div_exact(d, LaurentPoly::gcd(g, g)));
    EXPECT_NO_THROW(LaurentPoly::div_exact(g * a, d));
    EXPECT_NO_THROW(LaurentPoly::div_exact(g * b, d));
  }
}

TEST(LaurentTest, DivExactRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPoly a = random_poly(rng, 4, 4);
    LaurentPoly b = random_poly(rng, 3, 4);
    if (b.is_zero()) continue;
    EXPECT_EQ(LaurentPoly::div_exact(a * b, b), a);
  }
}

namespace {

Scalar random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  return Scalar::rational(Rational(num(rng), den(rng)));
}

Scalar random_cyc(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  return Scalar::cyclotomic(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

void check_field_axioms(const std::function<Scalar(std::mt19937_64&)>& draw, std::uint64_t seed) {
  constexpr int kCases = 1000;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < kCases; ++trial) {
    Scalar a = draw(rng);
    Scalar b = draw(rng);
    Scalar c = draw(rng);
    ASSERT_EQ((a + b) + c, a + (b + c)) << trial;
    ASSERT_EQ((a * b) * c, a * (b * c)) << trial;
    ASSERT_EQ((a + b) * c, a * c + b * c) << trial;
    ASSERT_EQ(a * b, b * a) << trial;
    ASSERT_EQ(a + b, b + a) << trial;
    ASSERT_EQ(a - a, Scalar(0)) << trial;
    if (!b.is_zero()) {
      ASSERT_TRUE((b * b.inverse()).is_one()) << trial;
      ASSERT_EQ(a / b * b, a) << trial;
    } else {
      ASSERT_THROW(b.inverse(), std::domain_error);
    }
  }
}

}  // namespace

TEST(ScalarTest, SymbolicFieldAxioms) { check_field_axioms(random_sym, 3); }

TEST(ScalarTest, RationalFieldAxioms) { check_field_axioms(random_rat, 4); }

TEST(ScalarTest, CyclotomicFieldAxioms) { check_field_axioms(random_cyc, 5); }

TEST(ScalarTest, SpecializationMatchesRationalMode) {
  // The same random expression computed symbolically and then embedded at
  // s = 3/2, v = 1 equals the expression computed from the embedded inputs.
  std::mt19937_64 rng(6);
  Field fr = Field::rational_s(Rational(3, 2));
  Field fs = Field::symbolic().with_unit_twist();
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Scalar a = random_sym(rng);
    Scalar b = random_sym(rng);
    Scalar c = random_sym(rng);
    try {
      Scalar sym = a * b + c * fs.s_pow(3);
      ASSERT_EQ(fr.embed(sym), fr.embed(a) * fr.embed(b) + fr.embed(c) * fr.s_pow(3)) << trial;
      if (!b.is_zero()) ASSERT_EQ(fr.embed(a / b), fr.embed(a) / fr.embed(b)) << trial;
      ++checked;
    } catch (const std::domain_error&) {
    }
  }
  EXPECT_GT(checked, 900);
}

TEST(ScalarTest, CanonicalFormIsUnique) {
  Field f = Field::symbolic();
  Scalar s = f.s_pow(1);
  Scalar x = (s * s - 1) / (s - 1);
  EXPECT_EQ(x, s + 1);
  EXPECT_TRUE(x.den().is_one());
  Scalar y = (1 - s) / (s * s - s);
  EXPECT_EQ(y, -f.s_pow(-1));
}

TEST(ScalarTest, EmbedIsRingHomomorphism) {
  std::mt19937_64 rng(5);
  Field fr = Field::rational_s(Rational(3, 2), Rational(5, 7));
  Field fc = Field::cyclotomic();
  for (int trial = 0; trial < 30; ++trial) {
    Scalar a = random_sym(rng);
    Scalar b = random_sym(rng);
    try {
      EXPECT_EQ(fr.embed(a * b), fr.embed(a) * fr.embed(b));
      EXPECT_EQ(fr.embed(a + b), fr.embed(a) + fr.embed(b));
    } catch (const std::domain_error&) {
    }
  }
  for (int trial = 0; trial < 30; ++trial) {
    Scalar a = Scalar::symbolic(random_poly(rng, 3, 4));
    Scalar b = Scalar::symbolic(random_poly(rng, 3, 4));
    Scalar av = Scalar::symbolic(LaurentPoly::from_terms({{1, 0, Integer(1)}})) * a;
    EXPECT_EQ(fc.embed(a * b), fc.embed(a) * fc.embed(b));
    EXPECT_EQ(fc.embed(av), fc.embed(a) * fc.s_pow(1));
  }
}

TEST(ScalarTest, CyclotomicConstants) {
  Field f = Field::cyclotomic();
  EXPECT_EQ(f.s_pow(6), f.one());
  EXPECT_EQ(f.s_pow(3), f.integer(-1));
  EXPECT_EQ(f.delta(), f.one());
  EXPECT_EQ(f.u(), f.one());
  Scalar z = f.s_pow(1);
  EXPECT_EQ(z * z.inverse(), f.one());
  EXPECT_EQ(z.pow(-5), z);
}

TEST(ScalarTest, ModeMismatchThrows) {
  Field fr = Field::rational_s(Rational(2));
  Field fc = Field::cyclotomic();
  EXPECT_THROW(fr.one() + fc.one(), ModeMismatch);
  EXPECT_EQ(fr.s_pow(2) + 1, fr.integer(5));
}

TEST(ScalarTest, FieldParse) {
  EXPECT_EQ(Field::parse("rational:3/2").s0(), Rational(3, 2));
  EXPECT_EQ(Field::parse("symbolic").mode(), Mode::Symbolic);
  EXPECT_THROW(Field::parse("complex"), std::invalid_argument);
}
