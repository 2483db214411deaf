#include "qtower/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <random>
#include <sstream>
#include <thread>

#include "qtower/daha.hpp"
#include "qtower/loop_checks.hpp"
#include "qtower/qkz.hpp"
#include "qtower/tower.hpp"
#include "qtower/transfer.hpp"

namespace qtower {

namespace {

// Every check of the battery is exact except the floating-point
// stochasticity spot check.
constexpr double kStochasticTol = 1e-12;
constexpr int kStochasticSamples = 100;
constexpr int kWheelSamples = 20;
constexpr int kMinSamples = 10;
constexpr double kSolveBudgetMillis = 10 * 60 * 1000.0;

using Results = std::vector<CheckResult>;

struct Task {
  std::string label;
  int n = -1;
  std::function<Results()> run;
};

CheckResult result(std::string check, int n, bool ok, std::string detail = {}, bool required = true) {
  CheckResult r;
  r.check = std::move(check);
  r.n = n;
  r.ok = ok;
  r.required = required;
  r.detail = std::move(detail);
  return r;
}

Task single(std::string label, int n, std::function<std::pair<bool, std::string>()> body, bool required = true) {
  return Task{label, n, [label, n, body, required]() {
                auto [ok, detail] = body();
                return Results{result(label, n, ok, detail, required)};
              }};
}

Field unit_symbolic() { return Field::symbolic().with_unit_twist(); }

std::uint64_t derive_seed(const SuiteConfig& cfg, int criterion, int slot) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(criterion), static_cast<std::uint32_t>(slot)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

int samples_of(const SuiteConfig& cfg) { return std::max(cfg.samples, kMinSamples); }

bool same(const Matrix& a, const Matrix& b) { return mat_is_zero(mat_sub(a, b)); }

std::string fmt_n(const char* what, int n, int i = -1, int j = -1) {
  std::ostringstream os;
  os << what << " n=" << n;
  if (i >= 0) os << " i=" << i;
  if (j >= 0) os << " j=" << j;
  return os.str();
}

// Matrices of the generators of V_n.
struct Generators {
  const TLModule& m;
  std::vector<Matrix> e, t, tinv, y, yinv;
  Matrix rho, rho_inv, id;

  explicit Generators(const TLModule& mod, bool with_y) : m(mod) {
    int n = m.n();
    rho = m.matrix_of([&](const Vec& v) { return m.apply_rho(v, 1); });
    rho_inv = m.matrix_of([&](const Vec& v) { return m.apply_rho(v, -1); });
    id = mat_identity(m.dim());
    if (n < 2) return;
    for (int i = 0; i < n; ++i) {
      e.push_back(m.matrix_of([&](const Vec& v) { return m.apply_e(i, v); }));
      t.push_back(m.matrix_of([&](const Vec& v) { return m.apply_T(i, v); }));
      tinv.push_back(m.matrix_of([&](const Vec& v) { return m.apply_T(i, v, true); }));
    }
    if (!with_y) return;
    y.push_back(Matrix{});
    yinv.push_back(Matrix{});
    for (int j = 1; j <= n; ++j) {
      y.push_back(m.matrix_of([&](const Vec& v) { return m.apply_Y(j, v); }));
      yinv.push_back(m.matrix_of([&](const Vec& v) { return m.apply_Y_inv(j, v); }));
    }
  }
};

int cyc(int i, int n) { return ((i % n) + n) % n; }

std::pair<bool, std::string> tl_relations(int n) {
  Field f = Field::symbolic();
  TLModule m(f, n);
  Generators g(m, false);
  if (!same(mat_mul(g.rho, g.rho_inv), g.id) || !same(mat_mul(g.rho_inv, g.rho), g.id)) return {false, "rho rho^-1"};
  for (int i = 0; i < n; ++i) {
    if (!same(mat_mul(g.e[i], g.e[i]), mat_scale(g.e[i], f.delta()))) return {false, fmt_n("e_i^2", n, i)};
    if (!same(mat_mul(g.rho, g.e[i]), mat_mul(g.e[cyc(i + 1, n)], g.rho))) return {false, fmt_n("rho e_i", n, i)};
    if (n < 3) continue;
    for (int j = 0; j < n; ++j) {
      int d = cyc(i - j, n);
      if (d == 0) continue;
      if (d == 1 || d == n - 1) {
        if (!same(mat_mul(mat_mul(g.e[i], g.e[j]), g.e[i]), g.e[i])) return {false, fmt_n("e_i e_j e_i", n, i, j)};
      } else if (!same(mat_mul(g.e[i], g.e[j]), mat_mul(g.e[j], g.e[i]))) {
        return {false, fmt_n("e_i e_j", n, i, j)};
      }
    }
  }
  // (rho e_1)^{n-1} = rho^n (rho e_1)
  Matrix re1 = mat_mul(g.rho, g.e[1]);
  Matrix lhs = g.id;
  for (int k = 0; k < n - 1; ++k) lhs = mat_mul(re1, lhs);
  Matrix rhs = re1;
  for (int k = 0; k < n; ++k) rhs = mat_mul(g.rho, rhs);
  if (!same(lhs, rhs)) return {false, fmt_n("(rho e_1)^{n-1}", n)};
  return {true, {}};
}

std::pair<bool, std::string> hecke_relations(int n) {
  Field f = Field::symbolic();
  TLModule m(f, n);
  Generators g(m, true);
  for (int i = 0; i < n; ++i) {
    // (T - t^{-1/2})(T + t^{1/2}) = 0
    Matrix a = mat_sub(g.t[i], mat_scale(g.id, f.s_pow(-2)));
    Matrix b = mat_add(g.t[i], mat_scale(g.id, f.s_pow(2)));
    if (!mat_is_zero(mat_mul(a, b))) return {false, fmt_n("quadratic", n, i)};
    if (!same(mat_mul(g.t[i], g.tinv[i]), g.id)) return {false, fmt_n("T T^-1", n, i)};
    if (!same(mat_mul(g.rho, g.t[i]), mat_mul(g.t[cyc(i + 1, n)], g.rho))) return {false, fmt_n("rho T_i", n, i)};
    if (n < 3) continue;
    int j = cyc(i + 1, n);
    if (!same(mat_mul(mat_mul(g.t[i], g.t[j]), g.t[i]), mat_mul(mat_mul(g.t[j], g.t[i]), g.t[j])))
      return {false, fmt_n("braid", n, i)};
    for (int k = 0; k < n; ++k) {
      int d = cyc(i - k, n);
      if (d == 0 || d == 1 || d == n - 1) continue;
      if (!same(mat_mul(g.t[i], g.t[k]), mat_mul(g.t[k], g.t[i]))) return {false, fmt_n("T_i T_k", n, i, k)};
    }
  }
  // Bernstein presentation.
  for (int j = 1; j <= n; ++j) {
    if (!same(mat_mul(g.y[j], g.yinv[j]), g.id)) return {false, fmt_n("Y Y^-1", n, j)};
    for (int k = j + 1; k <= n; ++k)
      if (!same(mat_mul(g.y[j], g.y[k]), mat_mul(g.y[k], g.y[j]))) return {false, fmt_n("Y_j Y_k", n, j, k)};
  }
  for (int i = 1; i < n; ++i) {
    if (!same(mat_mul(mat_mul(g.t[i], g.y[i + 1]), g.t[i]), g.y[i])) return {false, fmt_n("T_i Y_{i+1} T_i", n, i)};
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      if (!same(mat_mul(g.t[i], g.y[j]), mat_mul(g.y[j], g.t[i]))) return {false, fmt_n("T_i Y_j", n, i, j)};
    }
  }
  return {true, {}};
}

std::pair<bool, std::string> ybe_relations(int n) {
  // Spectral parameters are fixed elements of the symbolic field.
  Field f = Field::symbolic();
  TLModule m(f, n);
  Matrix rho = m.matrix_of([&](const Vec& v) { return m.apply_rho(v, 1); });
  const std::vector<std::pair<Scalar, Scalar>> params = {
      {f.s_pow(3) + Scalar(2), Scalar(5) - f.s_pow(-1)},
      {f.s_pow(1) * Scalar(3), f.s_pow(2) + f.s_pow(-2) + Scalar(1)},
  };
  for (const auto& [x, y] : params) {
    for (int i = 0; i < n; ++i) {
      int j = cyc(i + 1, n);
      Matrix ri_x = r_matrix(m, i, x);
      if (n >= 3) {
        Matrix lhs = mat_mul(mat_mul(ri_x, r_matrix(m, j, x * y)), r_matrix(m, i, y));
        Matrix rhs = mat_mul(mat_mul(r_matrix(m, j, y), r_matrix(m, i, x * y)), r_matrix(m, j, x));
        if (!same(lhs, rhs)) return {false, fmt_n("YBE", n, i)};
      }
      for (int k = 0; k < n; ++k) {
        int d = cyc(i - k, n);
        if (d == 0 || d == 1 || d == n - 1) continue;
        Matrix rk = r_matrix(m, k, y);
        if (!same(mat_mul(ri_x, rk), mat_mul(rk, ri_x))) return {false, fmt_n("far commutation", n, i, k)};
      }
      if (!same(mat_mul(ri_x, r_matrix(m, i, x.inverse())), mat_identity(m.dim())))
        return {false, fmt_n("unitarity", n, i)};
      if (!same(mat_mul(rho, ri_x), mat_mul(r_matrix(m, j, x), rho))) return {false, fmt_n("shift", n, i)};
    }
  }
  return {true, {}};
}

// ---------------------------------------------------------------- criteria

std::vector<Task> criterion1(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  auto solve_task = [](const Field& f, int n) {
    return [f, n]() {
      Results out;
      auto t0 = std::chrono::steady_clock::now();
      QkzParams p = QkzParams::standard(f, n);
      PolyVec g = solve(p, false);
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      VerifyReport rep = verify(QkzSystem::standard(p), g);
      out.push_back(result("qkz-equations", n, rep.ok, rep.ok ? f.name() : rep.message()));
      int deg = n * (n - 1) / 2;
      bool homog = std::all_of(g.begin(), g.end(), [&](const ZPoly& c) {
        return c.is_zero() || (c.is_homogeneous() && c.degree() == deg);
      });
      out.push_back(result("homogeneous-degree", n, homog, "degree " + std::to_string(deg)));
      const ZPoly& cap = g[Basis::of(n).index(fully_nested(n))];
      out.push_back(result("nested-component", n, cap == nested_product(f, n), cap.is_zero() ? "zero" : ""));
      CheckResult timing =
          result("solve-time", n, ms <= kSolveBudgetMillis, "budget " + std::to_string(static_cast<long long>(kSolveBudgetMillis)) + " ms");
      timing.millis = ms;
      out.push_back(timing);
      return out;
    };
  };
  for (int n = 1; n <= std::min(5, cfg.n_max); ++n) tasks.push_back({"solve", n, solve_task(Field::symbolic(), n)});
  if (cfg.n_max >= 6) tasks.push_back({"solve", 6, solve_task(Field::rational_s(Rational(2)), 6)});
  return tasks;
}

std::vector<Task> criterion2(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  Field f = Field::rational_s(Rational(2));
  for (int n = 1; n <= std::min(4, cfg.n_max); ++n) {
    tasks.push_back(single("oracle-unique", n, [f, n]() -> std::pair<bool, std::string> {
      QkzParams p = QkzParams::standard(f, n);
      auto basis = nullspace_oracle(QkzSystem::standard(p), n * (n - 1) / 2);
      if (basis.size() != 1) return {false, "dimension " + std::to_string(basis.size())};
      if (!proportional(basis[0], solve(p)).has_value()) return {false, "oracle vector not proportional to solver"};
      return {true, "dimension 1"};
    }));
  }
  for (int n = 2; n <= std::min(4, cfg.n_max); ++n) {
    std::uint64_t seed = derive_seed(cfg, 2, n);
    tasks.push_back(single("oracle-wrong-q", n, [f, n, seed]() -> std::pair<bool, std::string> {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int> num(1, 19), den(1, 9);
      QkzParams p = QkzParams::standard(f, n);
      int tried = 0;
      std::ostringstream os;
      while (tried < 5) {
        Scalar q = Scalar::rational(Rational(num(rng), den(rng)));
        if (q == p.q) continue;
        QkzParams w = p;
        w.q = q;
        auto basis = nullspace_oracle(QkzSystem::standard(w), n * (n - 1) / 2);
        if (!basis.empty()) return {false, "q=" + q.str() + " dimension " + std::to_string(basis.size())};
        os << (tried ? "," : "q=") << q.str();
        ++tried;
      }
      return {true, os.str()};
    }));
  }
  return tasks;
}

std::vector<Task> criterion3(const SuiteConfig& cfg) {
  int k = std::min(4, cfg.n_max - 1);
  std::vector<Task> tasks;
  if (k < 0) return tasks;
  tasks.push_back({"braid", -1, [k]() {
                     Results out;
                     for (const auto& st : braid_verify(Field::symbolic(), k)) {
                       out.push_back(result("braid-literal", st.n, st.literal_ok,
                                            "ratio " + st.ratio + ", stated " + st.expected));
                       out.push_back(result("braid-side-condition", st.n, st.side_condition_ok, st.detail));
                       Scalar stated = QkzParams::h_scalar(unit_symbolic(), st.n);
                       Scalar corrected = st.n % 2 ? -stated : stated;
                       out.push_back(result("braid-corrected-sign", st.n, st.proportional && st.ratio == corrected.str(),
                                            "(-1)^n times the stated scalar: " + corrected.str(), false));
                     }
                     return out;
                   }});
  tasks.push_back({"braid-zeta", -1, [k]() {
                     Results out;
                     for (const auto& st : braid_verify_zeta(k)) {
                       out.push_back(result("braid-zeta", st.n, st.literal_ok && st.side_condition_ok,
                                            "ratio " + st.ratio + ", expected " + st.expected));
                     }
                     return out;
                   }});
  return tasks;
}

std::vector<Task> criterion4(const SuiteConfig& cfg) {
  int k = std::min(4, cfg.n_max - 1);
  std::vector<Task> tasks;
  if (k < 0) return tasks;
  tasks.push_back({"dual", -1, [k]() {
                     Results out;
                     for (const auto& st : dual_verify(Field::symbolic(), k)) {
                       out.push_back(result("dual-recursion", st.n, st.literal_ok,
                                            "ratio " + st.ratio + ", expected " + st.expected));
                       out.push_back(result("dual-side-condition", st.n, st.side_condition_ok, st.detail));
                     }
                     return out;
                   }});
  return tasks;
}

std::vector<Task> criterion5(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  for (int n = 0; n <= std::min(5, cfg.n_max); ++n) {
    tasks.push_back({"phi", n, [n]() {
                       Results out;
                       Field f = Field::symbolic();
                       for (auto variant : {Variant::Plain, Variant::Iota}) {
                         std::string tag = variant == Variant::Plain ? "" : "-iota";
                         PhiMatrix p = phi(f, n, variant);
                         CheckReport a = check_intertwining(p);
                         out.push_back(result("intertwining" + tag, n, a.ok, a.detail));
                         CheckReport b = check_nested_coefficient(p);
                         out.push_back(result("nested-coefficient" + tag, n, b.ok, b.detail));
                       }
                       return out;
                     }});
  }
  for (int n = 2; n <= std::min(5, cfg.n_max); ++n) {
    std::uint64_t base = derive_seed(cfg, 5, n);
    tasks.push_back(single("word-choice", n, [n, base]() -> std::pair<bool, std::string> {
      Field f = unit_symbolic();
      PhiMatrix ref = phi(f, n);
      for (std::uint64_t k = 0; k < 4; ++k) {
        Factorization fac = factorize(f, n, base + k);
        if (phi(f, n, Variant::Plain, &fac).m != ref.m) return {false, "shuffle seed " + std::to_string(base + k)};
      }
      return {true, "4 shuffled factorizations"};
    }));
  }
  return tasks;
}

std::vector<Task> criterion6(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  for (int n = 2; n <= std::min(6, cfg.n_max); ++n) tasks.push_back(single("tl-relations", n, [n] { return tl_relations(n); }));
  for (int n = 2; n <= std::min(5, cfg.n_max); ++n) {
    tasks.push_back(single("hecke-relations", n, [n] { return hecke_relations(n); }));
    tasks.push_back(single("ybe-unitarity-shift", n, [n] { return ybe_relations(n); }));
  }
  for (int n = 0; n <= std::min(5, cfg.n_max - 1); ++n) {
    tasks.push_back(single("nu-diagram", n, [n]() -> std::pair<bool, std::string> {
      CheckReport r = nu_diagram_check(Field::symbolic(), n);
      return {r.ok, r.detail};
    }));
  }
  return tasks;
}

std::vector<Task> criterion7(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  int samples = samples_of(cfg);
  for (int n = 1; n <= std::min(5, cfg.n_max); ++n) {
    std::uint64_t s1 = derive_seed(cfg, 7, 3 * n), s2 = derive_seed(cfg, 7, 3 * n + 1), s3 = derive_seed(cfg, 7, 3 * n + 2);
    auto wrap = [samples](SampledReport r) -> std::pair<bool, std::string> {
      return {r.ok && r.samples >= samples, std::to_string(r.samples) + " samples" + (r.ok ? "" : ": " + r.detail)};
    };
    tasks.push_back(single("transfer-commute", n, [=] { return wrap(transfer_commutation_check(n, samples, s1)); }));
    tasks.push_back(single("transfer-rtt", n, [=] { return wrap(transfer_rtt_check(n, samples, s2)); }));
    tasks.push_back(single("transfer-conjugated", n, [=] { return wrap(tmat_conjugated_check(n, samples, s3)); }));
  }
  std::uint64_t seed = derive_seed(cfg, 7, 0);
  int n_top = std::min(5, cfg.n_max);
  tasks.push_back(single("tile-limit", -1, [seed, samples, n_top]() -> std::pair<bool, std::string> {
    // a(x/z) + t^{1/2} = z (t - 1) / D and b(x/z) + t = z (t^{3/2} - t^{-1/2}) / D
    // with D = t^{1/2} z - t^{-1/2} x nonzero at z = 0, so the limits are exact.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 29), den(1, 11);
    for (int k = 0; k < samples; ++k) {
      Field f = Field::rational_s(Rational(num(rng) + 1, den(rng)));
      Scalar x = Scalar::rational(Rational(num(rng), den(rng)));
      Scalar z = Scalar::rational(Rational(num(rng), den(rng)));
      Scalar d = f.s_pow(2) * z - f.s_pow(-2) * x;
      if (d.is_zero() || (f.s_pow(-2) * x).is_zero()) continue;
      if (weight_a(f, x / z) + f.s_pow(2) != z * (f.s_pow(4) - Scalar(1)) / d) return {false, "a(x/z) expansion"};
      if (weight_b(f, x / z) + f.s_pow(4) != z * (f.s_pow(6) - f.s_pow(-2)) / d) return {false, "b(x/z) expansion"};
      for (int n = 1; n <= n_top; ++n) {
        TransferOperator t(f, n);
        std::vector<Scalar> zs, nw, ne;
        for (int i = 0; i + 1 < n; ++i) zs.push_back(Scalar::rational(Rational(num(rng), den(rng))));
        for (const auto& zi : zs) {
          nw.push_back(weight_a(f, x / zi));
          ne.push_back(weight_b(f, x / zi));
        }
        nw.push_back(-f.s_pow(2));
        ne.push_back(-f.s_pow(4));
        if (!same(t.evaluate_last_zero(x, zs), t.with_tile_weights(nw, ne))) return {false, fmt_n("last tile", n)};
      }
    }
    return {true, "limits (-t^{1/2}, -t)"};
  }));
  return tasks;
}

std::vector<Task> criterion8(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  tasks.push_back(single("zeta-constants", -1, []() -> std::pair<bool, std::string> {
    Field f = Field::cyclotomic();
    if (!f.delta().is_one()) return {false, "delta = " + f.delta().str()};
    if (!f.u().is_one()) return {false, "u = " + f.u().str()};
    if (!f.q().is_one()) return {false, "q = " + f.q().str()};
    for (int n = 1; n <= 6; ++n)
      if (!QkzParams::c_value(f, n).is_one()) return {false, fmt_n("c_n", n)};
    return {true, "delta = u = q = c_n = 1"};
  }));
  for (int n = 0; n <= std::min(4, cfg.n_max); ++n) {
    tasks.push_back(single("o1-groundstate", n, [n]() -> std::pair<bool, std::string> {
      O1Report r = o1_groundstate_check(n, true);
      return {r.ok, r.ok ? "symbolic x" : r.detail};
    }));
  }
  if (cfg.n_max >= 5) {
    std::uint64_t seed = derive_seed(cfg, 8, 5);
    int samples = samples_of(cfg);
    tasks.push_back(single("o1-groundstate", 5, [seed, samples]() -> std::pair<bool, std::string> {
      O1Report r = o1_groundstate_check(5, false, samples, seed);
      return {r.ok, std::to_string(r.samples) + " sampled x" + (r.ok ? "" : ": " + r.detail)};
    }));
  }
  for (int n = 1; n <= std::min(6, cfg.n_max); ++n) {
    std::uint64_t seed = derive_seed(cfg, 8, 10 + n);
    tasks.push_back(single("stochastic", n, [n, seed]() -> std::pair<bool, std::string> {
      StochasticReport r = stochastic_check(n, kStochasticSamples, seed, kStochasticTol);
      std::ostringstream os;
      os << r.samples << " samples, max column deviation " << r.max_column_deviation << ", min entry "
         << r.min_real_entry << ", max |imag| " << r.max_imag_entry;
      return {r.ok && r.samples == kStochasticSamples, os.str()};
    }));
  }
  return tasks;
}

std::vector<Task> criterion9(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  for (int n = 1; n <= std::min(6, cfg.n_max); ++n) {
    tasks.push_back(single("weight-vector", n, [n]() -> std::pair<bool, std::string> {
      Field f = Field::symbolic();
      TLModule m(f, n);
      Vec q = build_Qn(m);
      if (is_zero_vec(q)) return {false, "Q_n = 0"};
      std::vector<Scalar> xh = xi_hat(f, n);
      for (int j = 1; j <= n; ++j) {
        Vec y = m.apply_yhat(j, q);
        for (int r = 0; r < m.dim(); ++r)
          if (y[r] != q[r] * xh[j - 1]) return {false, fmt_n("Yhat_j Q_n", n, j)};
      }
      return {true, {}};
    }));
  }
  for (int n = 2; n <= std::min(6, cfg.n_max); ++n) {
    tasks.push_back(single("dj-lowering", n, [n]() -> std::pair<bool, std::string> {
      Field f = Field::symbolic();
      TLModule m(f, n);
      std::vector<Vec> D = build_DJ(m);
      for (unsigned J = 0; J < D.size(); ++J)
        for (int i = 1; i <= n / 2; ++i) {
          if (J & (1u << (i - 1))) continue;
          Vec lhs = m.apply_yhat(2 * i, D[J | (1u << (i - 1))]);
          for (int r = 0; r < m.dim(); ++r)
            if (lhs[r] != D[J][r] * -f.s_pow(-3)) return {false, fmt_n("Yhat_2i D", n, i, static_cast<int>(J))};
        }
      return {true, {}};
    }));
  }
  for (int k = 1; k <= std::min(3, cfg.n_max / 2); ++k) {
    tasks.push_back(single("pairing", 2 * k, [k]() -> std::pair<bool, std::string> {
      Field f = Field::symbolic();
      TLModule m(f, 2 * k);
      Scalar lhs = m.pair_close(build_Qn(m));
      Scalar rhs = pairing_formula(f, 2 * k);
      return {lhs == rhs, lhs.str()};
    }));
  }
  return tasks;
}

std::vector<Task> criterion10(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  for (int n = 2; n <= std::min(5, cfg.n_max); ++n) {
    tasks.push_back(single("principal-series", n, [n]() -> std::pair<bool, std::string> {
      Field f = Field::rational_s(Rational(3, 2), Rational(5, 7));
      TLModule m(f, n);
      auto eigen = [&](const Vec& x, const std::function<Vec(const Vec&)>& op, const Scalar& c) {
        Vec y = op(x);
        for (int r = 0; r < m.dim(); ++r)
          if (y[r] != x[r] * c) return false;
        return true;
      };
      Vec ue = m.apply_intertwiner_perm(w_n_perm(n), build_Qn(m));
      if (is_zero_vec(ue)) return {false, "u_e = 0"};
      std::vector<Scalar> gamma = gamma_weight(f, n);
      for (int j = 1; j <= n; ++j)
        if (!eigen(ue, [&](const Vec& v) { return m.apply_Y(j, v); }, gamma[j - 1])) return {false, fmt_n("Y_j u_e", n, j)};
      for (int i : parabolic_set(n))
        if (!eigen(ue, [&](const Vec& v) { return m.apply_T(i, v); }, f.s_pow(-2))) return {false, fmt_n("T_i u_e", n, i)};
      for (const auto& w : min_coset_reps(n)) {
        Vec uw = m.apply_intertwiner_perm(w, ue);
        if (is_zero_vec(uw)) return {false, "u_w = 0"};
        std::vector<Scalar> mu = perm_act(w, gamma);
        for (int j = 1; j <= n; ++j)
          if (!eigen(uw, [&](const Vec& v) { return m.apply_Y(j, v); }, mu[j - 1])) return {false, fmt_n("Y_j u_w", n, j)};
        for (const auto& x : all_perms(n)) {
          if (perm_length(x) > 3) continue;
          auto norm = [&](const Vec& v) { return m.apply_intertwiner_perm(perm_inverse(x), m.apply_intertwiner_perm(x, v)); };
          if (!eigen(uw, norm, e_w_value(f, x, mu))) return {false, fmt_n("I_{w^-1} I_w", n)};
        }
      }
      return {true, std::to_string(min_coset_reps(n).size()) + " coset representatives"};
    }));
  }
  return tasks;
}

Field macdonald_field(int n) { return n <= 3 ? unit_symbolic() : Field::rational_s(Rational(2)); }

std::vector<Task> criterion11(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  int top = std::min(4, cfg.n_max);
  for (int n = 2; n <= top; ++n) {
    tasks.push_back(single("macdonald-eigenspace", n, [n]() -> std::pair<bool, std::string> {
      Field f = macdonald_field(n);
      MacdonaldResult r = macdonald_lambda_n(f, n);
      if (r.kernel_dim != 1) return {false, "joint kernel dimension " + std::to_string(r.kernel_dim)};
      if (!r.E.is_homogeneous() || r.E.degree() != n * (n - 1) / 2) return {false, "degree"};
      BasicRep rep(f, n, f.q());
      for (int i : parabolic_set(n))
        if (rep.T(i, r.E) != r.E * f.s_pow(2)) return {false, fmt_n("T_i E", n, i)};
      return {true, f.name()};
    }));
  }
  for (int n = 3; n <= top; ++n) {
    std::uint64_t seed = derive_seed(cfg, 11, n);
    tasks.push_back({"wheel", n, [n, seed]() {
                       Field f = macdonald_field(n);
                       ZPoly e = macdonald_lambda_n(f, n).E;
                       WheelReport w = wheel_check(e, f, kWheelSamples, seed);
                       WheelReport lit = wheel_check(e, f, kWheelSamples, seed, +1);
                       return Results{
                           result("wheel-vanishing", n, w.ok && w.samples == kWheelSamples,
                                  std::to_string(w.samples) + " points, t_K = t^-1" + (w.ok ? "" : ": " + w.witness)),
                           result("wheel-literal-t", n, lit.ok,
                                  lit.ok ? "vanishes" : "nonzero at " + lit.witness, false)};
                     }});
  }
  for (int n = 2; n <= std::min(6, cfg.n_max); ++n) {
    tasks.push_back(single("spectrum", n, [n]() -> std::pair<bool, std::string> {
      Field f = unit_symbolic();
      return {spectrum(f, lambda_n(n), f.q()) == cm_spectral_point(f, n), {}};
    }));
  }
  for (int n = 2; n <= std::min(3, cfg.n_max); ++n) {
    tasks.push_back(single("b-relation", n, [n]() -> std::pair<bool, std::string> {
      Field f = Field::rational_s(Rational(3, 2));
      BasicRep rep(f, n, Scalar::rational(Rational(7, 5)));
      int checked = 0;
      for (int total = 1; total <= 3; ++total)
        for (MonoKey k : monomials_of_degree(n, total)) {
          std::vector<int> l = mono_unpack(k, n);
          for (int i = 1; i < n; ++i) {
            if (l[i - 1] <= l[i]) continue;
            BRelationReport b = b_relation_check(rep, l, i);
            if (!b.ok) return {false, b.detail};
            ++checked;
          }
        }
      return {checked > 0, std::to_string(checked) + " pairs at s = 3/2, q = 7/5"};
    }));
  }
  for (int n = 2; n <= top; ++n) {
    tasks.push_back(single("cm-compare", n, [n]() -> std::pair<bool, std::string> {
      CmComparison c = cm_compare(macdonald_field(n), n);
      return {c.ok, c.ok && c.kappa ? "kappa = " + c.kappa->str() : c.detail};
    }));
  }
  return tasks;
}

std::vector<Task> criterion12(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  for (int n = 1; n <= std::min(4, cfg.n_max); ++n) {
    tasks.push_back(single("basic-rep", n, [n]() -> std::pair<bool, std::string> {
      QkzParams p = QkzParams::standard(unit_symbolic(), n);
      BasicRepReport r = verify_basic_rep(p, solve(p));
      return {r.ok, r.failing};
    }));
  }
  return tasks;
}

std::vector<Task> tasks_for(int id, const SuiteConfig& cfg) {
  switch (id) {
    case 1: return criterion1(cfg);
    case 2: return criterion2(cfg);
    case 3: return criterion3(cfg);
    case 4: return criterion4(cfg);
    case 5: return criterion5(cfg);
    case 6: return criterion6(cfg);
    case 7: return criterion7(cfg);
    case 8: return criterion8(cfg);
    case 9: return criterion9(cfg);
    case 10: return criterion10(cfg);
    case 11: return criterion11(cfg);
    case 12: return criterion12(cfg);
    default: throw std::out_of_range("criterion id");
  }
}

}  // namespace

bool CriterionResult::pass() const {
  if (checks.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok || !c.required; });
}

std::string CriterionResult::first_failure() const {
  for (const auto& c : checks)
    if (c.required && !c.ok) return c.check + (c.n >= 0 ? " n=" + std::to_string(c.n) : "") + ": " + c.detail;
  return checks.empty() ? "no checks in range" : "";
}

std::string criterion_title(int id) {
  static const char* titles[] = {
      "",
      "qKZ solutions",
      "oracle uniqueness",
      "braid recursion",
      "dual recursion",
      "intertwiner suite",
      "algebra suite",
      "transfer suite",
      "O(1) suite",
      "weight-vector suite",
      "principal-series suite",
      "Macdonald suite",
      "basic-rep characterization",
  };
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id");
  return titles[id];
}

void run_parallel(int count, int threads, const std::function<void(int)>& job) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int k = 0; k < count; ++k) job(k);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&]() {
      for (int k = next++; k < count; k = next++) job(k);
    });
  for (auto& t : pool) t.join();
}

CriterionResult run_criterion(int id, const SuiteConfig& cfg) {
  CriterionResult out;
  out.id = id;
  out.title = criterion_title(id);
  std::vector<Task> tasks = tasks_for(id, cfg);
  std::erase_if(tasks, [&](const Task& t) {
    if (t.n >= 0 && t.n < cfg.n_min) return true;
    return !cfg.only.empty() && std::find(cfg.only.begin(), cfg.only.end(), t.label) == cfg.only.end();
  });
  std::vector<Results> slots(tasks.size());
  run_parallel(static_cast<int>(tasks.size()), cfg.threads, [&](int k) {
    auto t0 = std::chrono::steady_clock::now();
    Results r;
    try {
      r = tasks[k].run();
    } catch (const std::exception& e) {
      r = {result(tasks[k].label, tasks[k].n, false, std::string("exception: ") + e.what())};
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    for (auto& c : r)
      if (c.millis == 0) c.millis = ms;
    slots[k] = std::move(r);
  });
  for (auto& s : slots)
    for (auto& c : s) out.checks.push_back(std::move(c));
  return out;
}

std::vector<CriterionResult> run_suite(const SuiteConfig& cfg, const std::vector<int>& ids) {
  std::vector<int> which = ids;
  if (which.empty())
    for (int i = 1; i <= kCriterionCount; ++i) which.push_back(i);
  std::vector<CriterionResult> out;
  for (int id : which) out.push_back(run_criterion(id, cfg));
  return out;
}

}  // namespace qtower
