#include <gtest/gtest.h>

#include "qtower/tlrep.hpp"
#include "test_util.hpp"

using namespace qtower;
using namespace qtower::testing;

namespace {

Op e_op(const TLModule& m, int i) {
  return [&m, i](const Vec& x) { return m.apply_e(i, x); };
}
Op rho_op(const TLModule& m, int dir = 1) {
  return [&m, dir](const Vec& x) { return m.apply_rho(x, dir); };
}
Op t_op(const TLModule& m, int i, bool inv = false) {
  return [&m, i, inv](const Vec& x) { return m.apply_T(i, x, inv); };
}
Op y_op(const TLModule& m, int j) {
  return [&m, j](const Vec& x) { return m.apply_Y(j, x); };
}
Op id_op() {
  return [](const Vec& x) { return x; };
}
Op scale_op(Op a, Scalar c) {
  return [a, c](const Vec& x) { return scaled(a(x), c); };
}

}  // namespace

TEST(TLRep, LittleArchRules) {
  Field f = Field::symbolic();
  Pattern outside = Pattern::from_arches(2, {{1, 2}}, 0);
  Pattern inside = Pattern::from_arches(2, {{1, 2}}, 1);
  EImage a = e_on_pattern(1, outside);
  EXPECT_EQ(a.weight, LoopWeight::Delta);
  EXPECT_EQ(a.pattern, outside);
  EImage b = e_on_pattern(1, inside);
  EXPECT_EQ(b.weight, LoopWeight::U);
  EXPECT_EQ(b.pattern, outside);
}

TEST(TLRep, RewireFlagXor) {
  Pattern p = Pattern::from_arches(4, {{1, 4}, {2, 3}}, 1);
  ASSERT_TRUE(p.flagged(1, 4));
  ASSERT_FALSE(p.flagged(2, 3));
  EImage r = e_on_pattern(1, p);
  EXPECT_EQ(r.weight, LoopWeight::One);
  EXPECT_EQ(r.pattern.arches(), (std::vector<std::pair<int, int>>{{1, 2}, {3, 4}}));
  EXPECT_FALSE(r.pattern.flagged(1, 2));
  EXPECT_TRUE(r.pattern.flagged(3, 4));
}

TEST(TLRep, DefectMoves) {
  Pattern p = Pattern::from_arches(3, {{2, 3}}, 1);
  EImage r = e_on_pattern(1, p);
  EXPECT_EQ(r.weight, LoopWeight::One);
  EXPECT_EQ(r.pattern.defect(), 3);
  EXPECT_EQ(r.pattern.partner(1), 2);
  EXPECT_THROW(e_on_pattern(3, p), std::out_of_range);
}

TEST(TLRep, OutputsAreValidPatterns) {
  for (int n = 2; n <= kMaxPoints; ++n) {
    const Basis& b = Basis::of(n);
    for (const auto& p : b.patterns()) {
      for (int i = 1; i < n; ++i) {
        Pattern q = e_on_pattern(i, p).pattern;
        EXPECT_GE(b.index(q), 0);
        EXPECT_EQ(b.decode(q.word()), q);
      }
      for (int dir : {1, -1}) EXPECT_GE(b.index(rho_on_pattern(p, dir).pattern), 0);
    }
  }
}

TEST(TLRep, RotationPowers) {
  Field f = Field::symbolic();
  TLModule m1(f, 1);
  EXPECT_TRUE(vec_eq(m1.apply_rho(m1.unit(0)), scaled(m1.unit(0), f.v_pow(1))));
  for (int n = 2; n <= 7; ++n) {
    TLModule m(f, n);
    Op pw = id_op();
    for (int k = 0; k < n; ++k) pw = compose(rho_op(m), pw);
    Scalar c = n % 2 == 0 ? f.one() : f.v_pow(1);
    EXPECT_TRUE(same_operator(m, pw, scale_op(id_op(), c))) << n;
    EXPECT_TRUE(same_operator(m, compose(rho_op(m), rho_op(m, -1)), id_op())) << n;
    EXPECT_TRUE(same_operator(m, compose(rho_op(m, -1), rho_op(m)), id_op())) << n;
  }
}

TEST(TLRep, TemperleyLiebRelations) {
  Field f = Field::symbolic();
  for (int n = 2; n <= 6; ++n) {
    TLModule m(f, n);
    auto idx = [n](int i) { return ((i % n) + n) % n; };
    for (int i = 0; i < n; ++i) {
      EXPECT_TRUE(same_operator(m, compose(e_op(m, i), e_op(m, i)), scale_op(e_op(m, i), f.delta())))
          << "n=" << n << " i=" << i;
      // rho e_i = e_{i+1} rho
      EXPECT_TRUE(same_operator(m, compose(rho_op(m), e_op(m, i)), compose(e_op(m, idx(i + 1)), rho_op(m))))
          << "n=" << n << " i=" << i;
      if (n < 3) continue;
      for (int j = 0; j < n; ++j) {
        int d = idx(i - j);
        if (d == 1 || d == n - 1) {
          EXPECT_TRUE(same_operator(m, compose(e_op(m, i), compose(e_op(m, j), e_op(m, i))), e_op(m, i)))
              << "n=" << n << " i=" << i << " j=" << j;
        } else {
          EXPECT_TRUE(same_operator(m, compose(e_op(m, i), e_op(m, j)), compose(e_op(m, j), e_op(m, i))))
              << "n=" << n << " i=" << i << " j=" << j;
        }
      }
    }
    Op re1 = compose(rho_op(m), e_op(m, 1));
    Op lhs = id_op();
    for (int k = 0; k < n - 1; ++k) lhs = compose(re1, lhs);
    Op rhs = re1;
    for (int k = 0; k < n; ++k) rhs = compose(rho_op(m), rhs);
    EXPECT_TRUE(same_operator(m, lhs, rhs)) << "n=" << n;
  }
}

TEST(TLRep, HeckeRelations) {
  Field f = Field::symbolic();
  for (int n = 2; n <= 5; ++n) {
    TLModule m(f, n);
    for (int i = 0; i < n; ++i) {
      Op ti = t_op(m, i);
      Op quad = [&](const Vec& x) {
        Vec a = m.apply_T(i, x);
        for (std::size_t k = 0; k < a.size(); ++k) a[k] += f.s_pow(2) * x[k];
        Vec c = m.apply_T(i, a);
        for (std::size_t k = 0; k < a.size(); ++k) c[k] -= f.s_pow(-2) * a[k];
        return c;
      };
      EXPECT_TRUE(same_operator(m, quad, [&](const Vec& x) { return scaled(x, Scalar(0)); })) << n << " " << i;
      EXPECT_TRUE(same_operator(m, compose(ti, t_op(m, i, true)), id_op()));
      EXPECT_TRUE(same_operator(m, compose(rho_op(m), ti), compose(t_op(m, (i + 1) % n), rho_op(m))));
      if (n < 3) continue;
      int j = (i + 1) % n;
      Op tj = t_op(m, j);
      EXPECT_TRUE(same_operator(m, compose(ti, compose(tj, ti)), compose(tj, compose(ti, tj)))) << n << " " << i;
      for (int k = 0; k < n; ++k) {
        int d = ((i - k) % n + n) % n;
        if (d == 0 || d == 1 || d == n - 1) continue;
        EXPECT_TRUE(same_operator(m, compose(ti, t_op(m, k)), compose(t_op(m, k), ti)));
      }
    }
  }
}

TEST(TLRep, BernsteinRelations) {
  Field f = Field::symbolic();
  for (int n = 2; n <= 5; ++n) {
    TLModule m(f, n);
    for (int j = 1; j <= n; ++j) {
      EXPECT_TRUE(same_operator(m, compose(y_op(m, j), [&m, j](const Vec& x) { return m.apply_Y_inv(j, x); }),
                                id_op()));
      for (int k = j + 1; k <= n; ++k)
        EXPECT_TRUE(same_operator(m, compose(y_op(m, j), y_op(m, k)), compose(y_op(m, k), y_op(m, j))))
            << n << " " << j << " " << k;
    }
    for (int i = 1; i < n; ++i) {
      EXPECT_TRUE(same_operator(m, compose(t_op(m, i), compose(y_op(m, i + 1), t_op(m, i))), y_op(m, i)));
      for (int j = 1; j <= n; ++j) {
        if (j == i || j == i + 1) continue;
        EXPECT_TRUE(same_operator(m, compose(t_op(m, i), y_op(m, j)), compose(y_op(m, j), t_op(m, i))));
      }
    }
    Op prod = y_op(m, n);
    for (int i = n - 1; i >= 1; --i) prod = compose(t_op(m, i), prod);
    EXPECT_TRUE(same_operator(m, prod, rho_op(m)));
  }
}

TEST(TLRep, WordApplication) {
  Field f = Field::symbolic();
  TLModule m(f, 4);
  std::mt19937 rng(3);
  Vec x = random_int_vec(m.dim(), rng);
  EXPECT_TRUE(vec_eq(m.apply_word(OpWord{}, x), x));
  OpWord w{f.s_pow(1), {Letter::rho(), Letter::rho_inv()}};
  EXPECT_TRUE(vec_eq(m.apply_word(w, x), scaled(x, f.s_pow(1))));
  OpWord w2{Scalar(1), {Letter::e(1), Letter::rho()}};
  EXPECT_TRUE(vec_eq(m.apply_word(w2, x), m.apply_e(1, m.apply_rho(x))));
}

TEST(TLRep, WeightVectorQn) {
  Field f = Field::symbolic();
  for (int n = 2; n <= 6; ++n) {
    TLModule m(f, n);
    Vec q = build_Qn(m);
    EXPECT_FALSE(is_zero_vec(q)) << n;
    std::vector<Scalar> xh = xi_hat(f, n);
    for (int j = 1; j <= n; ++j) EXPECT_TRUE(vec_eq(m.apply_yhat(j, q), scaled(q, xh[j - 1]))) << n << " " << j;
    std::vector<Scalar> xi = xi_weight(f, n);
    for (int j = 1; j <= n; ++j) EXPECT_TRUE(vec_eq(m.apply_Y(j, q), scaled(q, xi[j - 1]))) << n << " " << j;
  }
}

TEST(TLRep, WeightThreePoints) {
  Field f = Field::symbolic();
  TLModule m(f, 3);
  Vec q = build_Qn(m);
  EXPECT_TRUE(vec_eq(m.apply_yhat(3, q), scaled(q, f.v_pow(1))));
  std::vector<Scalar> xi = xi_weight(f, 3);
  EXPECT_EQ(xi[0], f.s_pow(-2) * f.v_pow(1));
  EXPECT_EQ(xi[1], f.v_pow(-1));
  EXPECT_EQ(xi[2], f.s_pow(2) * f.v_pow(1));
}

TEST(TLRep, DJLowering) {
  Field f = Field::symbolic();
  for (int n = 2; n <= 6; ++n) {
    TLModule m(f, n);
    std::vector<Vec> D = build_DJ(m);
    int k = n / 2;
    for (unsigned J = 0; J < D.size(); ++J)
      for (int i = 1; i <= k; ++i) {
        if (J & (1u << (i - 1))) continue;
        Vec lhs = m.apply_yhat(2 * i, D[J | (1u << (i - 1))]);
        EXPECT_TRUE(vec_eq(lhs, scaled(D[J], -f.s_pow(-3)))) << n << " J=" << J << " i=" << i;
      }
  }
}

TEST(TLRep, PairingEven) {
  Field f = Field::symbolic();
  EXPECT_EQ(pairing_formula(f, 2), f.v_pow(-2) - f.s_pow(-2));
  for (int n = 2; n <= 6; n += 2) {
    TLModule m(f, n);
    EXPECT_EQ(m.pair_close(build_Qn(m)), pairing_formula(f, n)) << n;
    EXPECT_TRUE(m.pair_close(m.zero()).is_zero());
  }
}

TEST(TLRep, PairingOddAtUnitTwist) {
  for (int s0 : {2, 3, 5}) {
    Field f = Field::rational_s(Rational(s0, 1));
    for (int n = 3; n <= 7; n += 2) {
      TLModule m(f, n);
      EXPECT_EQ(m.pair_close(build_Qn(m)), pairing_formula(f, n)) << n << " s=" << s0;
    }
  }
}

TEST(TLRep, PermutationUtilities) {
  EXPECT_EQ(w_n_perm(4), (Perm{1, 3, 2, 4}));
  EXPECT_EQ(w_n_perm(3), (Perm{1, 3, 2}));
  EXPECT_EQ(w_n_perm(5), (Perm{1, 4, 2, 5, 3}));
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(static_cast<long long>(min_coset_reps(n).size()), pattern_count(n));
    for (const auto& w : all_perms(n)) {
      std::vector<int> word = reduced_word(w);
      EXPECT_EQ(static_cast<int>(word.size()), perm_length(w));
      Perm x = perm_identity(n);
      for (int i : word) x = perm_compose(x, Perm([&] {
                                            Perm s = perm_identity(n);
                                            std::swap(s[i - 1], s[i]);
                                            return s;
                                          }()));
      EXPECT_EQ(x, w);
    }
  }
  EXPECT_EQ(parabolic_set(4), (std::vector<int>{1, 3}));
  EXPECT_EQ(parabolic_set(3), (std::vector<int>{1}));
}

TEST(TLRep, HighestWeightFormula) {
  Field f = Field::symbolic();
  for (int n = 2; n <= 6; ++n) {
    std::vector<Scalar> g = gamma_weight(f, n);
    std::vector<Scalar> expect;
    int k = (n + 1) / 2;
    // first block: exponents 1-n, 5-n, ...; second block: 3-n, 7-n, ...
    Scalar first_twist = n % 2 == 0 ? f.v_pow(-1) : f.v_pow(1);
    for (int a = 0; a < k; ++a) expect.push_back(f.s_pow(1 - n + 4 * a) * first_twist);
    for (int a = 0; a < n - k; ++a) expect.push_back(f.s_pow(3 - n + 4 * a) * first_twist.inverse());
    EXPECT_EQ(g, expect) << n;
  }
}

TEST(TLRep, PrincipalSeries) {
  Field f = Field::rational_s(Rational(3, 2), Rational(5, 7));
  for (int n = 2; n <= 5; ++n) {
    TLModule m(f, n);
    Vec q = build_Qn(m);
    Vec ue = m.apply_intertwiner_perm(w_n_perm(n), q);
    ASSERT_FALSE(is_zero_vec(ue));
    std::vector<Scalar> gamma = gamma_weight(f, n);
    for (int j = 1; j <= n; ++j) EXPECT_TRUE(vec_eq(m.apply_Y(j, ue), scaled(ue, gamma[j - 1]))) << n << " " << j;
    for (int i : parabolic_set(n)) EXPECT_TRUE(vec_eq(m.apply_T(i, ue), scaled(ue, f.s_pow(-2)))) << n << " " << i;
    for (const auto& w : min_coset_reps(n)) {
      Vec uw = m.apply_intertwiner_perm(w, ue);
      EXPECT_FALSE(is_zero_vec(uw));
      std::vector<Scalar> mu = perm_act(w, gamma);
      for (int j = 1; j <= n; ++j) EXPECT_TRUE(vec_eq(m.apply_Y(j, uw), scaled(uw, mu[j - 1])));
    }
  }
}

TEST(TLRep, IntertwinerNorm) {
  Field f = Field::rational_s(Rational(3, 2), Rational(5, 7));
  for (int n = 2; n <= 5; ++n) {
    TLModule m(f, n);
    Vec ue = m.apply_intertwiner_perm(w_n_perm(n), build_Qn(m));
    std::vector<Scalar> gamma = gamma_weight(f, n);
    for (const auto& w : min_coset_reps(n)) {
      Vec uw = m.apply_intertwiner_perm(w, ue);
      std::vector<Scalar> mu = perm_act(w, gamma);
      for (const auto& x : all_perms(n)) {
        if (perm_length(x) > 3) continue;
        Vec back = m.apply_intertwiner_perm(perm_inverse(x), m.apply_intertwiner_perm(x, uw));
        EXPECT_TRUE(vec_eq(back, scaled(uw, e_w_value(f, x, mu))));
      }
    }
  }
}
