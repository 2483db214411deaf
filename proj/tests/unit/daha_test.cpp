#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qtower/daha.hpp"

using namespace qtower;

namespace {

Field unit_symbolic() { return Field::symbolic().with_unit_twist(); }

ZPoly random_homogeneous(int n, int d, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  std::vector<ZPoly::Term> terms;
  for (MonoKey k : monomials_of_degree(n, d)) {
    int x = c(rng);
    if (x != 0) terms.emplace_back(k, Scalar(x));
  }
  if (terms.empty()) terms.emplace_back(monomials_of_degree(n, d).front(), Scalar(1));
  return ZPoly::from_terms(n, std::move(terms));
}

ZPoly elementary_symmetric(int n, int k) {
  ZPoly e(n);
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> ex(n, 0);
    for (int i = 0; i < n; ++i) ex[i] = (mask >> i) & 1;
    e += ZPoly::monomial(n, ex, Scalar(1));
  }
  return e;
}

}  // namespace

TEST(Daha, DividedDifferenceIsExactQuotient) {
  std::mt19937 rng(1);
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i) {
      ZPoly f = random_homogeneous(n, 3, rng);
      ZPoly num = f - f.swap(i);
      ZPoly den = ZPoly::variable(n, i) - ZPoly::variable(n, i + 1);
      EXPECT_EQ(divided_difference(f, i), ZPoly::divide_exact(num, den));
    }
}

TEST(Daha, SymmetricInputIsEigenvector) {
  Field f = unit_symbolic();
  for (int n = 2; n <= 4; ++n) {
    ZPoly e = elementary_symmetric(n, 2) * elementary_symmetric(n, 1);
    BasicRep minus(f, n, f.q(), Orientation::Minus);
    BasicRep plus(f, n, f.q(), Orientation::Plus);
    for (int i = 1; i < n; ++i) {
      EXPECT_EQ(minus.T(i, e), e * (-f.s_pow(-2)));
      EXPECT_EQ(plus.T(i, e), e * (-f.s_pow(2)));
    }
  }
}

TEST(Daha, HeckeRelations) {
  std::mt19937 rng(2);
  Field f = unit_symbolic();
  for (auto o : {Orientation::Minus, Orientation::Plus}) {
    for (int n = 2; n <= 4; ++n) {
      BasicRep rep(f, n, f.q(), o);
      Scalar k = rep.k();
      ZPoly g = random_homogeneous(n, 3, rng);
      for (int i = 1; i < n; ++i) {
        // (T - k^{-1})(T + k) = 0
        ZPoly a = rep.T(i, g);
        a.add_scaled(g, k);
        ZPoly b = rep.T(i, a);
        b.add_scaled(a, -k.inverse());
        EXPECT_TRUE(b.is_zero()) << n << " " << i;
        EXPECT_EQ(rep.T(i, rep.T_inv(i, g)), g);
        if (i + 1 < n)
          EXPECT_EQ(rep.T(i, rep.T(i + 1, rep.T(i, g))), rep.T(i + 1, rep.T(i, rep.T(i + 1, g))));
        if (i + 1 < n) EXPECT_EQ(rep.rho(rep.T(i, g)), rep.T(i + 1, rep.rho(g)));
      }
      EXPECT_EQ(rep.rho(rep.rho_inv(g)), g);
      EXPECT_EQ(rep.rho_inv(rep.rho(g)), g);
    }
  }
}

TEST(Daha, DualYOperatorsCommute) {
  std::mt19937 rng(3);
  for (int n = 2; n <= 4; ++n) {
    Field f = n <= 3 ? unit_symbolic() : Field::rational_s(Rational(5, 3));
    BasicRep rep(f, n, f.q());
    for (int d = 1; d <= 3; ++d) {
      ZPoly g = random_homogeneous(n, d, rng);
      for (int i = 1; i <= n; ++i) {
        ZPoly yi = rep.Ybar(i, g);
        EXPECT_EQ(yi.degree(), d);
        for (int j = i + 1; j <= n; ++j) EXPECT_EQ(rep.Ybar(i, rep.Ybar(j, g)), rep.Ybar(j, yi)) << n << i << j;
      }
    }
  }
}

TEST(Daha, SpectrumExamples) {
  Field f = unit_symbolic();
  Scalar q = f.q();
  std::vector<Scalar> s3 = spectrum(f, {2, 0, 1}, q);
  EXPECT_EQ(s3, (std::vector<Scalar>{f.s_pow(8), f.s_pow(4), f.s_pow(6)}));
  std::vector<Scalar> s4 = spectrum(f, {2, 0, 3, 1}, q);
  EXPECT_EQ(s4, (std::vector<Scalar>{-f.s_pow(10), -f.s_pow(6), -f.s_pow(12), -f.s_pow(8)}));
  EXPECT_EQ(spectrum_exponents({0, 0, 0, 0}), (std::vector<int>{3, 1, -1, -3}));
  EXPECT_EQ(lambda_n(3), (std::vector<int>{2, 0, 1}));
  EXPECT_EQ(lambda_n(4), (std::vector<int>{2, 0, 3, 1}));
  EXPECT_EQ(lambda_n(6), (std::vector<int>{4, 2, 0, 5, 3, 1}));
  EXPECT_EQ(lambda_n(5), (std::vector<int>{4, 2, 0, 3, 1}));
}

TEST(Daha, SpectrumMatchesSpectralPoint) {
  Field f = unit_symbolic();
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> l = lambda_n(n);
    int total = 0;
    for (int x : l) total += x;
    EXPECT_EQ(total, n * (n - 1) / 2);
    EXPECT_EQ(spectrum(f, l, f.q()), cm_spectral_point(f, n)) << n;
  }
}

TEST(Daha, PermutationTables) {
  // w_4 sends 2 to 3 and 3 to 2.
  Perm w4 = w_n_perm(4);
  EXPECT_EQ(w4[1], 3);
  EXPECT_EQ(w4[2], 2);
  EXPECT_EQ(w0_parabolic(4), (Perm{2, 1, 4, 3}));
  EXPECT_EQ(w0_parabolic(5), (Perm{3, 2, 1, 5, 4}));
  for (int n = 2; n <= 6; ++n) {
    Perm w0 = w0_parabolic(n);
    EXPECT_EQ(perm_compose(w0, w0), perm_identity(n));
    // Longest element of S_n factors through the parabolic longest element.
    Perm longest(n);
    for (int i = 0; i < n; ++i) longest[i] = n - i;
    Perm bar = perm_compose(longest, perm_inverse(w0));
    auto reps = min_coset_reps(n);
    EXPECT_NE(std::find(reps.begin(), reps.end(), bar), reps.end()) << n;
  }
}

TEST(Daha, WheelFreeOrbitIsCosetOrbit) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> l = lambda_n(n);
    EXPECT_TRUE(in_b23(l)) << n;
    std::set<std::vector<int>> expected;
    for (const Perm& s : min_coset_reps(n)) expected.insert(permute_weight(s, l));
    std::set<std::vector<int>> found;
    for (const auto& mu : orbit(l))
      if (in_b23(mu)) found.insert(mu);
    EXPECT_EQ(found, expected) << n;
  }
  EXPECT_TRUE(has_neighbourhood({0, 1, 0}));
}

TEST(Daha, DegreeOneEigenpolynomials) {
  Field f = Field::rational_s(Rational(3, 2));
  for (int n = 2; n <= 4; ++n) {
    BasicRep rep(f, n, Scalar::rational(Rational(7, 5)));
    std::vector<int> l(n, 0);
    l[n - 1] = 1;
    EXPECT_EQ(macdonald_E(rep, l).E.str(), ZPoly::variable(n, n).str());
    // Raising the box to z_1 picks up lower terms in z_2, ..., z_n.
    l[n - 1] = 0;
    l[0] = 1;
    ZPoly e1 = macdonald_E(rep, l).E;
    EXPECT_EQ(e1.size(), static_cast<std::size_t>(n));
    EXPECT_TRUE(e1.coeff(mono_pack(l)).is_one());
  }
}

TEST(Daha, MacdonaldAtSpecialQ) {
  for (int n = 2; n <= 4; ++n) {
    Field f = n <= 3 ? unit_symbolic() : Field::rational_s(Rational(2));
    MacdonaldResult r = macdonald_lambda_n(f, n);
    EXPECT_EQ(r.kernel_dim, 1);
    EXPECT_TRUE(r.E.is_homogeneous());
    EXPECT_EQ(r.E.degree(), n * (n - 1) / 2);
    EXPECT_TRUE(r.E.coeff(mono_pack(lambda_n(n))).is_one());
    BasicRep rep(f, n, f.q());
    for (int i : parabolic_set(n)) EXPECT_EQ(rep.T(i, r.E), r.E * f.s_pow(2)) << n << " " << i;
    for (int j = 1; j <= n; ++j) EXPECT_EQ(rep.Ybar(j, r.E), r.E * r.spec[j - 1]);
  }
}

TEST(Daha, WheelVanishing) {
  for (int n = 3; n <= 4; ++n) {
    Field f = n <= 3 ? unit_symbolic() : Field::rational_s(Rational(2));
    ZPoly e = macdonald_lambda_n(f, n).E;
    WheelReport w = wheel_check(e, f, 20, n);
    EXPECT_TRUE(w.ok) << n << " " << w.witness;
    EXPECT_EQ(w.samples, 20);
    EXPECT_FALSE(wheel_check(ZPoly::variable(n, 1), f, 20, n).ok);
    // The locus read with t in place of t^{-1} does not annihilate E.
    EXPECT_FALSE(wheel_check(e, f, 20, n, +1).ok);
  }
}

TEST(Daha, BRelationGeneric) {
  Field f = Field::rational_s(Rational(3, 2));
  for (int n = 2; n <= 3; ++n) {
    BasicRep rep(f, n, Scalar::rational(Rational(7, 5)));
    int checked = 0;
    for (int total = 1; total <= 3; ++total)
      for (MonoKey k : monomials_of_degree(n, total)) {
        std::vector<int> l = mono_unpack(k, n);
        for (int i = 1; i < n; ++i) {
          if (l[i - 1] <= l[i]) continue;
          BRelationReport b = b_relation_check(rep, l, i);
          EXPECT_TRUE(b.ok) << b.detail << " ratio " << b.lhs_over_rhs;
          ++checked;
        }
      }
    EXPECT_GT(checked, 0);
  }
}

TEST(Daha, CherednikMatsuoMatchesSolver) {
  for (int n = 2; n <= 4; ++n) {
    Field f = n <= 3 ? unit_symbolic() : Field::rational_s(Rational(2));
    CmComparison c = cm_compare(f, n);
    EXPECT_TRUE(c.ok) << n << ": " << c.detail;
    ASSERT_TRUE(c.kappa.has_value());
    EXPECT_FALSE(c.kappa->is_zero());
  }
}

TEST(Daha, BasicRepCharacterization) {
  Field f = unit_symbolic();
  for (int n = 1; n <= 4; ++n) {
    QkzParams p = QkzParams::standard(f, n);
    PolyVec g = solve(p);
    BasicRepReport r = verify_basic_rep(p, g);
    EXPECT_TRUE(r.ok) << n << " " << r.failing;
    if (n >= 2) {
      PolyVec h = g;
      h[0] = h[0] * Scalar(3);
      EXPECT_FALSE(verify_basic_rep(p, h).ok) << n;
    }
  }
}
