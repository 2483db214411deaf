#include <gtest/gtest.h>

#include <random>

#include "qtower/qkz.hpp"
#include "qtower/transfer.hpp"
#include "test_util.hpp"

using namespace qtower;

namespace {

Scalar rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(2, 11);
  std::uniform_int_distribution<int> den(1, 6);
  std::uniform_int_distribution<int> sign(0, 1);
  return Scalar::rational(Rational(num(rng) * (sign(rng) ? 1 : -1), den(rng)));
}

PolyVec set_last_zero(const PolyVec& f) {
  PolyVec g;
  for (const auto& p : f) g.push_back(p.set_last_zero());
  return g;
}

}  // namespace

TEST(Qkz, ParameterIdentities) {
  Field f = Field::symbolic();
  for (int n = 1; n <= 7; ++n) {
    QkzParams p = QkzParams::standard(f, n);
    QkzParams p1 = QkzParams::standard(f, n + 1);
    EXPECT_EQ(-f.s_pow(-3) * p1.c, p.lambda() * p.c) << n;
    EXPECT_EQ(p.c.pow(n), p.q.pow(-n * (n - 1) / 2)) << n;
  }
  EXPECT_EQ(QkzParams::c_value(f, 0), f.s_pow(1) + f.s_pow(-1));
  EXPECT_EQ(QkzParams::c_value(f, 1), Scalar(1));
  Field z = Field::cyclotomic();
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(QkzParams::c_value(z, n).is_one());
  EXPECT_TRUE(z.q().is_one());
}

TEST(Qkz, SmallSolutions) {
  Field f = Field::symbolic();
  PolyVec g1 = solve(QkzParams::standard(f, 1));
  ASSERT_EQ(g1.size(), 1u);
  EXPECT_EQ(g1[0], ZPoly::constant(1, Scalar(1)));

  PolyVec g3 = solve(QkzParams::standard(f, 3));
  const Basis& b3 = Basis::of(3);
  for (const auto& p : g3) {
    EXPECT_TRUE(p.is_homogeneous());
    EXPECT_EQ(p.degree(), 3);
  }
  ZPoly nested = linear2(3, 2, f.s_pow(2), 1, -f.s_pow(-2)) * linear2(3, 3, f.s_pow(2), 1, -f.s_pow(-2)) *
                 linear2(3, 3, f.s_pow(2), 2, -f.s_pow(-2));
  EXPECT_EQ(g3[b3.index(fully_nested(3))], nested);
}

TEST(Qkz, SolveAndVerifySymbolic) {
  Field f = Field::symbolic();
  for (int n = 0; n <= 4; ++n) {
    QkzParams p = QkzParams::standard(f, n);
    PolyVec g = solve(p, false);
    VerifyReport r = verify(QkzSystem::standard(p), g);
    EXPECT_TRUE(r.ok) << n << ": " << r.message();
    EXPECT_EQ(r.degree, n * (n - 1) / 2);
    for (const auto& c : g) EXPECT_FALSE(c.is_zero());
  }
}

TEST(Qkz, PerturbedSolutionFails) {
  Field f = Field::symbolic();
  QkzParams p = QkzParams::standard(f, 4);
  PolyVec g = solve(p);
  QkzSystem sys = QkzSystem::standard(p);
  for (int j : {0, 3}) {
    PolyVec h = g;
    const auto& t = h[j].terms().front();
    h[j] += ZPoly::from_terms(4, {{t.first, Scalar(1)}});
    VerifyReport r = verify(sys, h);
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(r.witness.empty());
  }
}

TEST(Qkz, ZeroSeedGivesZero) {
  Field f = Field::rational_s(Rational(2));
  for (int n = 1; n <= 5; ++n) {
    PolyVec g = solve_seeded(QkzParams::standard(f, n), ZPoly(n));
    for (const auto& c : g) EXPECT_TRUE(c.is_zero());
  }
}

TEST(Qkz, WrongParametersBreakDivisionOrVerification) {
  Field f = Field::rational_s(Rational(2));
  QkzParams p = QkzParams::standard(f, 4);
  p.q = Scalar::rational(Rational(7, 3));
  EXPECT_ANY_THROW(solve(p));
}

TEST(Qkz, OracleTwoPoints) {
  Field f = Field::rational_s(Rational(3, 2));
  QkzParams p = QkzParams::standard(f, 2);
  auto basis = nullspace_oracle(QkzSystem::standard(p), 1);
  ASSERT_EQ(basis.size(), 1u);
  PolyVec g = solve(p);
  ASSERT_TRUE(proportional(basis[0], g).has_value());
  // The nested component is the one whose puncture lies inside the arch.
  const Basis& b = Basis::of(2);
  int cap = b.index(fully_nested(2));
  EXPECT_EQ(b[cap].gap(), 1);
  EXPECT_EQ(g[cap], nested_product(f, 2));
  int other = 1 - cap;
  EXPECT_NE(g[other], g[cap]);
}

TEST(Qkz, OracleUniqueness) {
  Field f = Field::rational_s(Rational(2));
  for (int n = 1; n <= 4; ++n) {
    QkzParams p = QkzParams::standard(f, n);
    auto basis = nullspace_oracle(QkzSystem::standard(p), n * (n - 1) / 2);
    ASSERT_EQ(basis.size(), 1u) << n;
    EXPECT_TRUE(proportional(basis[0], solve(p)).has_value()) << n;
    // Divisibility of the nested component with symmetric quotient.
    const ZPoly& cap = basis[0][Basis::of(n).index(fully_nested(n))];
    ZPoly quo = ZPoly::divide_exact(cap, nested_product(f, n));
    for (int i = 1; i < n; ++i) EXPECT_EQ(quo.swap(i), quo);
  }
}

TEST(Qkz, OracleWrongQ) {
  Field f = Field::rational_s(Rational(2));
  std::mt19937 rng(3);
  for (int sample = 0; sample < 5; ++sample) {
    QkzParams p = QkzParams::standard(f, 3);
    Scalar q = rat(rng);
    if (q == p.q) continue;
    p.q = q;
    EXPECT_TRUE(nullspace_oracle(QkzSystem::standard(p), 3).empty()) << q.str();
  }
}

TEST(Qkz, RestrictedOracle) {
  Field f = Field::rational_s(Rational(2));
  for (int n = 1; n <= 3; ++n) {
    QkzSystem sys = QkzSystem::restricted(f, n);
    PolyVec low = set_last_zero(solve(QkzParams::standard(f, n + 1)));
    VerifyReport r = verify(sys, low);
    EXPECT_TRUE(r.ok) << n << ": " << r.message();
    auto basis = nullspace_oracle(sys, n * (n + 1) / 2);
    ASSERT_EQ(basis.size(), 1u) << n;
    EXPECT_TRUE(proportional(basis[0], low).has_value()) << n;
  }
}

TEST(Qkz, InvertedSystemRoundTrip) {
  // Solutions with t^{1/4} -> t^{-1/4} solve the inverted system.
  Field f = Field::symbolic();
  for (int n = 1; n <= 4; ++n) {
    PolyVec g = solve(QkzParams::standard(f, n));
    PolyVec h;
    for (const auto& p : g) h.push_back(p.map_coeffs([](const Scalar& c) { return c.invert_s(); }));
    QkzSystem sys_q = QkzSystem::inverted_standard(f, n);
    EXPECT_TRUE(verify(sys_q, h).ok) << n << " " << verify(sys_q, h).message();
  }
}

TEST(Qkz, RMatrixIdentities) {
  std::mt19937 rng(21);
  for (int sample = 0; sample < 20; ++sample) {
    Field f = Field::rational_s(Rational(3 + sample % 4, 2 + sample % 3));
    int n = 3 + sample % 3;
    TLModule m(f, n);
    Scalar x = rat(rng);
    Scalar y = rat(rng);
    Matrix rho = m.matrix_of([&](const Vec& v) { return m.apply_rho(v, 1); });
    for (int i = 1; i + 1 < n; ++i) {
      Matrix lhs = mat_mul(mat_mul(r_matrix(m, i, x), r_matrix(m, i + 1, x * y)), r_matrix(m, i, y));
      Matrix rhs = mat_mul(mat_mul(r_matrix(m, i + 1, y), r_matrix(m, i, x * y)), r_matrix(m, i + 1, x));
      EXPECT_TRUE(mat_is_zero(mat_sub(lhs, rhs)));
      EXPECT_TRUE(mat_is_zero(mat_sub(mat_mul(rho, r_matrix(m, i, x)), mat_mul(r_matrix(m, i + 1, x), rho))));
    }
    for (int i = 1; i < n; ++i)
      EXPECT_TRUE(mat_is_zero(mat_sub(mat_mul(r_matrix(m, i, x), r_matrix(m, i, x.inverse())), mat_identity(m.dim()))));
  }
}
