#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qtower/loop_checks.hpp"
#include "qtower/transfer.hpp"
#include "test_util.hpp"

using namespace qtower;
using namespace qtower::testing;

namespace {

Scalar rat(std::mt19937& rng, int lo = 2, int hi = 9) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, 5);
  std::uniform_int_distribution<int> sign(0, 1);
  int p = num(rng) * (sign(rng) ? 1 : -1);
  return Scalar::rational(Rational(p, den(rng)));
}

Field random_field(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(2, 7);
  std::uniform_int_distribution<int> den(1, 4);
  int p = num(rng);
  int q = den(rng);
  if (p == q) ++p;
  return Field::rational_s(Rational(p, q));
}

Matrix rho_matrix(const TLModule& m, int dir = 1) {
  return m.matrix_of([&](const Vec& x) { return m.apply_rho(x, dir); });
}

}  // namespace

TEST(Transfer, LayerOracleForGenerators) {
  Field f = Field::rational_s(Rational(3, 2));
  for (int n = 1; n <= kMaxPoints; ++n) {
    const Basis& b = Basis::of(n);
    for (const auto& p : b.patterns()) {
      for (int i = 1; i < n; ++i) {
        EImage e = e_on_pattern(i, p);
        Composite c = compose_layer(e_layer(n, i), p);
        EXPECT_EQ(c.pattern, e.pattern) << p.key() << " e" << i;
        int du = e.weight == LoopWeight::U ? 1 : 0;
        int dd = e.weight == LoopWeight::Delta ? 1 : 0;
        EXPECT_EQ(c.u_loops, du);
        EXPECT_EQ(c.delta_loops, dd);
      }
      for (int dir : {1, -1}) {
        Composite c = compose_layer(rho_layer(n, dir), p);
        EXPECT_EQ(c.pattern, rho_on_pattern(p, dir).pattern) << p.key() << " dir " << dir;
        EXPECT_EQ(c.u_loops + c.delta_loops, 0);
      }
    }
    if (n < 2) continue;
    TLModule m(f, n);
    for (int j = 0; j < m.dim(); ++j) {
      Composite c = compose_layer(e_layer(n, 0), b[j]);
      Scalar w = f.delta().pow(c.delta_loops) * f.u().pow(c.u_loops);
      EXPECT_EQ(m.e_entry(0, j).target, b.index(c.pattern)) << b[j].key();
      EXPECT_EQ(m.e_entry(0, j).coeff, w) << b[j].key();
    }
  }
}

TEST(Transfer, UniformRowsAreRotations) {
  for (int n = 1; n <= kMaxPoints; ++n) {
    std::uint32_t all = (1u << n) - 1;
    for (const auto& p : enumerate(n)) {
      Composite ne = compose_layer(row_layer(n, all), p);
      Composite nw = compose_layer(row_layer(n, 0), p);
      EXPECT_EQ(ne.pattern, rho_on_pattern(p, 1).pattern) << p.key();
      EXPECT_EQ(nw.pattern, rho_on_pattern(p, -1).pattern) << p.key();
      EXPECT_EQ(ne.delta_loops + ne.u_loops + nw.delta_loops + nw.u_loops, 0);
    }
  }
}

TEST(Transfer, TwoPointTraceTable) {
  // tau = (nw, ne): N_1 -> W_1 = channel 2 -> W_2 -> S_2 and N_2 -> E_2 = channel 2
  // is taken, so N_2 -> channel 2 ... the row joins N_1 with N_2 and S_1 with S_2.
  Layer l = row_layer(2, 0b10);
  EXPECT_EQ(l.link[inner_end(1)], inner_end(2));
  EXPECT_EQ(l.link[outer_end(2, 1)], outer_end(2, 2));
  Pattern outside = Pattern::from_arches(2, {{1, 2}}, 0);
  Pattern inside = Pattern::from_arches(2, {{1, 2}}, 1);
  Composite a = compose_layer(l, outside);
  Composite b = compose_layer(l, inside);
  EXPECT_EQ(a.delta_loops + a.u_loops, 1);
  EXPECT_EQ(b.delta_loops + b.u_loops, 1);
  EXPECT_EQ(a.u_loops + b.u_loops, 1);
}

TEST(Transfer, OddRowsHaveNoPunctureLoops) {
  for (int n = 1; n <= 7; n += 2)
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Layer l = row_layer(n, mask);
      for (const auto& p : enumerate(n)) EXPECT_EQ(compose_layer(l, p).u_loops, 0);
    }
}

TEST(Transfer, WeightsAtZeta) {
  Field f = Field::cyclotomic();
  EXPECT_TRUE(f.delta().is_one());
  EXPECT_TRUE(f.u().is_one());
  EXPECT_TRUE(f.q().is_one());
  for (int k = -3; k <= 3; ++k) {
    if (k == 0) continue;
    Scalar y = Scalar::cyclotomic(Rational(k, 2), Rational(1, 3));
    EXPECT_TRUE((weight_a(f, y) + weight_b(f, y)).is_one());
  }
}

TEST(Transfer, LimitWeights) {
  // a(x/z) -> -t^{1/2} and b(x/z) -> -t as z -> 0, with error O(z).
  Field f = Field::rational_s(Rational(3, 2));
  Scalar x = Scalar::rational(Rational(5));
  Scalar a_lim = -f.s_pow(2);
  Scalar b_lim = -f.s_pow(4);
  for (int e = 4; e <= 40; e += 12) {
    Scalar z = Scalar::rational(Rational(Integer(1), Integer::pow(Integer(10), e)));
    double da = (weight_a(f, x / z) - a_lim).rat().to_double();
    double db = (weight_b(f, x / z) - b_lim).rat().to_double();
    EXPECT_LT(std::abs(da), std::pow(10.0, 2 - e));
    EXPECT_LT(std::abs(db), std::pow(10.0, 2 - e));
  }
  std::mt19937 rng(10);
  for (int n = 1; n <= 4; ++n) {
    TransferOperator t(f, n);
    std::vector<Scalar> z;
    std::vector<Scalar> nw, ne;
    for (int i = 0; i + 1 < n; ++i) z.push_back(rat(rng));
    Scalar y = rat(rng);
    for (const auto& zi : z) {
      nw.push_back(weight_a(f, y / zi));
      ne.push_back(weight_b(f, y / zi));
    }
    nw.push_back(a_lim);
    ne.push_back(b_lim);
    EXPECT_TRUE(mat_is_zero(mat_sub(t.evaluate_last_zero(y, z), t.with_tile_weights(nw, ne))));
  }
}

TEST(Transfer, Commutation) {
  std::mt19937 rng(11);
  for (int n = 1; n <= 5; ++n)
    for (int sample = 0; sample < 10; ++sample) {
      Field f = random_field(rng);
      TransferOperator t(f, n);
      std::vector<Scalar> z;
      for (int i = 0; i < n; ++i) z.push_back(rat(rng));
      Scalar x1 = rat(rng);
      Scalar x2 = rat(rng);
      Matrix a = t.evaluate(x1, z);
      Matrix b = t.evaluate(x2, z);
      EXPECT_TRUE(mat_is_zero(mat_sub(mat_mul(a, b), mat_mul(b, a)))) << "n=" << n;
    }
}

TEST(Transfer, RTTRelations) {
  std::mt19937 rng(12);
  for (int n = 2; n <= 5; ++n)
    for (int sample = 0; sample < 10; ++sample) {
      Field f = random_field(rng);
      TransferOperator t(f, n);
      TLModule m(f, n);
      std::vector<Scalar> z;
      for (int i = 0; i < n; ++i) z.push_back(rat(rng));
      Scalar x = rat(rng);
      Matrix tz = t.evaluate(x, z);
      for (int i = 1; i < n; ++i) {
        std::vector<Scalar> zs = z;
        std::swap(zs[i - 1], zs[i]);
        Matrix r = r_matrix(m, i, z[i] / z[i - 1]);
        EXPECT_TRUE(mat_is_zero(mat_sub(mat_mul(r, t.evaluate(x, zs)), mat_mul(tz, r)))) << n << " " << i;
      }
      std::vector<Scalar> zr(z.begin() + 1, z.end());
      zr.push_back(z[0]);
      Matrix rho = rho_matrix(m);
      EXPECT_TRUE(mat_is_zero(mat_sub(mat_mul(rho, t.evaluate(x, zr)), mat_mul(tz, rho)))) << n;
    }
}

TEST(Transfer, ClearedPolynomialMatchesEvaluation) {
  std::mt19937 rng(13);
  Field f = Field::rational_s(Rational(5, 3));
  for (int n = 1; n <= 3; ++n) {
    TransferOperator t(f, n);
    const auto& c = t.cleared();
    std::vector<Scalar> pt;
    for (int i = 0; i <= n; ++i) pt.push_back(rat(rng));
    std::vector<Scalar> z(pt.begin(), pt.begin() + n);
    Matrix m = t.evaluate(pt[n], z);
    Scalar factor = t.clearing_factor().evaluate(pt);
    for (int r = 0; r < t.dim(); ++r)
      for (int j = 0; j < t.dim(); ++j) EXPECT_EQ(c[r][j].evaluate(pt), factor * m[r][j]);
  }
}

TEST(Transfer, StochasticAtZeta) {
  for (int n = 1; n <= 5; ++n) {
    StochasticReport rep = stochastic_check(n, 100, 5 + n);
    EXPECT_TRUE(rep.ok) << "n=" << n << " dev=" << rep.max_column_deviation << " min=" << rep.min_real_entry;
  }
}

TEST(Transfer, ConjugatedBraidIdentity) {
  for (int n = 1; n <= 5; ++n) {
    SampledReport r = tmat_conjugated_check(n, 10, 100 + n);
    EXPECT_TRUE(r.ok) << n << ": " << r.detail;
    EXPECT_EQ(r.samples, 10);
  }
}

TEST(Transfer, SampledCommutationAndRTT) {
  for (int n = 1; n <= 4; ++n) {
    SampledReport c = transfer_commutation_check(n, 10, n);
    EXPECT_TRUE(c.ok) << n << ": " << c.detail;
    SampledReport r = transfer_rtt_check(n, 10, n);
    EXPECT_TRUE(r.ok) << n << ": " << r.detail;
  }
}

TEST(Transfer, ConjugatedIdentityNeedsTheScalar) {
  // Dropping the factor -t^{3/4} breaks the identity.
  Field f = Field::rational_s(Rational(5, 2));
  TransferOperator big(f, 3);
  TransferOperator small(f, 2);
  std::vector<Scalar> z{Scalar::rational(Rational(3)), Scalar::rational(Rational(-7, 2))};
  Scalar x = Scalar::rational(Rational(4, 3));
  Matrix p = phi(f, 2).m;
  EXPECT_FALSE(mat_is_zero(mat_sub(mat_mul(big.evaluate_last_zero(x, z), p), mat_mul(p, small.evaluate(x, z)))));
}

TEST(Transfer, GroundStateAtZeta) {
  for (int n = 0; n <= 4; ++n) {
    O1Report r = o1_groundstate_check(n, true);
    EXPECT_TRUE(r.ok) << n << ": " << r.detail;
  }
  O1Report r5 = o1_groundstate_check(5, false, 2, 3);
  EXPECT_TRUE(r5.ok) << r5.detail;
  EXPECT_EQ(r5.samples, 2);
}

TEST(Transfer, GroundStateRejectsOtherVector) {
  // A perturbed vector is not an eigenvector.
  Field f = Field::cyclotomic();
  PolyVec g = solve(QkzParams::standard(f, 3));
  g[0] = g[0] * Scalar(2);
  TransferOperator t(f, 3);
  PolyVec lhs = t.apply_cleared(g);
  ZPoly k = t.clearing_factor();
  bool all_equal = true;
  for (std::size_t j = 0; j < g.size(); ++j) all_equal = all_equal && lhs[j] == k * g[j].extend(1);
  EXPECT_FALSE(all_equal);
}
