#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>

#include "json_io.hpp"
#include "qtower/daha.hpp"
#include "qtower/loop_checks.hpp"
#include "qtower/qkz.hpp"
#include "qtower/suite.hpp"
#include "qtower/tower.hpp"
#include "qtower/transfer.hpp"

using namespace qtower;
using io::Json;

namespace {

struct RunConfig {
  int n = 3;
  int n_max = 4;
  std::string mode;
  int samples = 10;
  std::uint64_t seed = 0;
  std::string out = "out";
  std::string in;
  std::string q;
  bool timing = true;
};

// Thrown for configurations that are valid syntax but not computable at desk scale.
struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Field field_of(const std::string& mode) {
  if (mode == "symbolic,v=1") return Field::symbolic().with_unit_twist();
  return Field::parse(mode);
}

std::string path_in(const RunConfig& c, const std::string& name) { return (std::filesystem::path(c.out) / name).string(); }

void write(const RunConfig& c, const std::string& name, const Json& j) {
  std::string p = path_in(c, name);
  io::write_file(p, j);
  std::cout << "wrote " << p << '\n';
}

int status(bool ok) { return ok ? EXIT_SUCCESS : EXIT_FAILURE; }

void require_range(const char* what, int n, int lo, int hi, const std::string& hint = {}) {
  if (n < lo || n > hi)
    throw Infeasible(std::string(what) + ": n = " + std::to_string(n) + " outside " + std::to_string(lo) + ".." +
                     std::to_string(hi) + (hint.empty() ? "" : "; " + hint));
}

int cmd_solve(const RunConfig& c) {
  std::string mode = c.mode.empty() ? (c.n <= 5 ? "symbolic" : "rational:2") : c.mode;
  Field f = field_of(mode);
  int cap = f.mode() == Mode::Symbolic ? 5 : 6;
  require_range("solve", c.n, 0, cap, "symbolic solving is supported up to n = 5, use --mode rational:2 for n = 6");
  QkzParams p = QkzParams::standard(f, c.n);
  PolyVec g = solve(p, false);
  VerifyReport r = verify(QkzSystem::standard(p), g);
  write(c, "g" + std::to_string(c.n) + ".json", io::solution_to_json(p, g));
  std::cout << "g" << c.n << ": " << g.size() << " components, degree " << c.n * (c.n - 1) / 2 << ", " << f.name()
            << ", verify " << (r.ok ? "ok" : r.message()) << '\n';
  return status(r.ok);
}

int cmd_verify(const RunConfig& c) {
  if (c.in.empty()) throw CLI::ValidationError("verify", "--in is required");
  io::LoadedSolution s = io::solution_from_json(io::read_file(c.in));
  VerifyReport r = verify(QkzSystem::standard(s.params), s.g);
  Json rep{{"n", s.params.n}, {"s_mode", s.params.field.name()}, {"ok", r.ok}, {"homogeneous", r.homogeneous},
           {"degree", r.degree}};
  if (!r.ok) rep["failure"] = r.message();
  write(c, "verify_g" + std::to_string(s.params.n) + ".json", rep);
  std::cout << c.in << ": " << (r.ok ? "ok" : r.message()) << '\n';
  return status(r.ok);
}

int cmd_oracle(const RunConfig& c) {
  Field f = field_of(c.mode.empty() ? "rational:2" : c.mode);
  int cap = f.mode() == Mode::Symbolic ? 3 : 4;
  require_range("oracle", c.n, 1, cap,
                "the dense nullspace is limited to n <= 3 symbolic and n <= 4 at rational or cyclotomic s");
  QkzParams p = QkzParams::standard(f, c.n);
  bool standard_q = c.q.empty();
  if (!standard_q) {
    if (f.mode() != Mode::RationalS) throw CLI::ValidationError("oracle", "--q needs --mode rational:p/q");
    p.q = Scalar::rational(Rational::parse(c.q));
    standard_q = p.q == QkzParams::standard(f, c.n).q;
  }
  auto basis = nullspace_oracle(QkzSystem::standard(p), c.n * (c.n - 1) / 2);
  bool ok;
  Json rep{{"n", c.n}, {"s_mode", f.name()}, {"q", io::scalar_to_json(p.q, f)}, {"dimension", basis.size()}};
  if (standard_q) {
    bool prop = basis.size() == 1 && proportional(basis[0], solve(p)).has_value();
    rep["spanned_by_solver"] = prop;
    ok = prop;
  } else {
    ok = basis.empty();
  }
  rep["ok"] = ok;
  write(c, "oracle" + std::to_string(c.n) + ".json", rep);
  std::cout << "oracle n=" << c.n << " q=" << p.q.str() << ": dimension " << basis.size() << (ok ? " (expected)" : " (unexpected)")
            << '\n';
  return status(ok);
}

Json steps_json(const std::vector<RecursionStep>& steps) {
  Json out = Json::array();
  for (const auto& st : steps)
    out.push_back(Json{{"n", st.n},
                       {"literal_ok", st.literal_ok},
                       {"proportional", st.proportional},
                       {"ratio", st.ratio},
                       {"expected", st.expected},
                       {"side_condition_ok", st.side_condition_ok},
                       {"detail", st.detail}});
  return out;
}

int cmd_tower(const RunConfig& c, bool dual) {
  require_range(dual ? "tower-dual" : "tower-braid", c.n_max, 0, 4, "g^(n_max + 1) must stay within n <= 5");
  Field f = Field::symbolic();
  bool ok = true;
  Json rep{{"n_max", c.n_max}};
  if (dual) {
    auto steps = dual_verify(f, c.n_max);
    for (const auto& st : steps) {
      ok = ok && st.literal_ok && st.side_condition_ok;
      std::cout << "dual n=" << st.n << ": " << (st.literal_ok ? "ok" : "FAIL") << " ratio " << st.ratio << '\n';
    }
    rep["steps"] = steps_json(steps);
  } else {
    auto steps = braid_verify(f, c.n_max);
    for (const auto& st : steps) {
      ok = ok && st.literal_ok && st.side_condition_ok;
      std::cout << "braid n=" << st.n << ": " << (st.literal_ok ? "ok" : "FAIL") << " ratio " << st.ratio << ", stated "
                << st.expected << '\n';
    }
    auto zeta = braid_verify_zeta(c.n_max);
    for (const auto& st : zeta) {
      ok = ok && st.literal_ok && st.side_condition_ok;
      std::cout << "braid at zeta n=" << st.n << ": " << (st.literal_ok ? "ok" : "FAIL") << '\n';
    }
    rep["steps"] = steps_json(steps);
    rep["zeta_steps"] = steps_json(zeta);
  }
  for (int n = 0; n <= c.n_max; ++n) {
    PhiMatrix p = phi(f, n, dual ? Variant::Iota : Variant::Plain);
    write(c, std::string(dual ? "phi_iota" : "phi") + std::to_string(n) + ".json", io::matrix_to_json(p.m, f, n + 1, n));
  }
  rep["ok"] = ok;
  write(c, dual ? "tower_dual.json" : "tower_braid.json", rep);
  return status(ok);
}

SuiteConfig suite_config(const RunConfig& c, int n_min, int n_max, std::vector<std::string> only = {}) {
  SuiteConfig s;
  s.n_min = n_min;
  s.n_max = n_max;
  s.samples = c.samples;
  s.seed = c.seed;
  s.threads = worker_threads();
  s.only = std::move(only);
  return s;
}

// Prints and stores selected checks of the battery.
int run_checks(const RunConfig& c, const std::vector<int>& ids, const SuiteConfig& s, const std::string& file) {
  auto results = run_suite(s, ids);
  bool ok = true;
  std::size_t count = 0;
  for (const auto& r : results) {
    count += r.checks.size();
    for (const auto& k : r.checks) {
      if (k.required) ok = ok && k.ok;
      std::cout << (k.ok ? "ok   " : "FAIL ") << (k.required ? "" : "[info] ") << k.check;
      if (k.n >= 0) std::cout << " n=" << k.n;
      if (!k.detail.empty()) std::cout << ": " << k.detail;
      std::cout << '\n';
    }
  }
  if (count == 0) throw Infeasible("no checks in the requested range");
  write(c, file, io::suite_summary(results, c.timing));
  return status(ok);
}

int cmd_nu(const RunConfig& c) {
  require_range("nu-check", c.n_max, 0, 5);
  return run_checks(c, {6}, suite_config(c, 0, c.n_max + 1, {"nu-diagram"}), "nu_check.json");
}

int cmd_transfer(const RunConfig& c) {
  require_range("transfer-check", c.n, 1, 5);
  int rc = run_checks(c, {7}, suite_config(c, c.n, c.n, {"transfer-commute", "transfer-rtt", "transfer-conjugated"}),
                      "transfer_check" + std::to_string(c.n) + ".json");
  StochasticReport st = stochastic_check(c.n, 100, c.seed, 1e-12);
  std::cout << (st.ok ? "ok   " : "FAIL ") << "stochastic n=" << c.n << ": max column deviation " << st.max_column_deviation
            << ", min entry " << st.min_real_entry << '\n';
  // One sample of T(x; z) at rational s for inspection.
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<int> num(1, 19), den(1, 7);
  Field f = Field::rational_s(Rational(num(rng) + 1, den(rng)));
  std::vector<Scalar> z;
  for (int i = 0; i < c.n; ++i) z.push_back(Scalar::rational(Rational(num(rng), den(rng))));
  Scalar x = Scalar::rational(Rational(num(rng), den(rng)));
  Json sample = io::matrix_to_json(TransferOperator(f, c.n).evaluate(x, z), f, c.n, c.n);
  sample["x"] = io::scalar_to_json(x, f);
  Json zs = Json::array();
  for (const auto& zi : z) zs.push_back(io::scalar_to_json(zi, f));
  sample["z"] = zs;
  write(c, "transfer_matrix" + std::to_string(c.n) + ".json", sample);
  write(c, "stochastic" + std::to_string(c.n) + ".json",
        Json{{"n", c.n}, {"samples", st.samples}, {"tolerance", 1e-12}, {"max_column_deviation", st.max_column_deviation},
             {"min_real_entry", st.min_real_entry}, {"max_imag_entry", st.max_imag_entry}, {"ok", st.ok}});
  return rc == EXIT_SUCCESS && st.ok ? EXIT_SUCCESS : EXIT_FAILURE;
}

int cmd_o1(const RunConfig& c) {
  require_range("o1-check", c.n, 0, 6, "n = 6 runs for about two minutes per sample");
  bool symbolic_x = c.n <= 4;
  O1Report r = o1_groundstate_check(c.n, symbolic_x, c.samples, c.seed);
  Json rep{{"n", c.n}, {"s_mode", "cyclotomic"}, {"symbolic_x", symbolic_x}, {"samples", r.samples}, {"ok", r.ok}};
  if (!r.ok) rep["detail"] = r.detail;
  write(c, "o1_check" + std::to_string(c.n) + ".json", rep);
  std::cout << "o1 n=" << c.n << " (" << (symbolic_x ? "symbolic x" : std::to_string(r.samples) + " sampled x")
            << "): " << (r.ok ? "eigenvector, eigenvalue prod(t^{1/2} z_i - t^{-1/2} x)" : r.detail) << '\n';
  return status(r.ok);
}

int cmd_hecke_weights(const RunConfig& c) {
  require_range("hecke-weights", c.n, 1, 6);
  return run_checks(c, {9, 10}, suite_config(c, c.n, c.n), "hecke_weights" + std::to_string(c.n) + ".json");
}

Field macdonald_mode(const RunConfig& c, int n) {
  if (!c.mode.empty()) return field_of(c.mode).mode() == Mode::Symbolic ? Field::symbolic().with_unit_twist() : field_of(c.mode);
  return n <= 3 ? Field::symbolic().with_unit_twist() : Field::rational_s(Rational(2));
}

int cmd_macdonald(const RunConfig& c) {
  Field f = macdonald_mode(c, c.n);
  require_range("macdonald", c.n, 1, f.mode() == Mode::Symbolic ? 4 : 5, "use --mode rational:p/q for larger n");
  MacdonaldResult r = macdonald_lambda_n(f, c.n);
  write(c, "E" + std::to_string(c.n) + ".json", io::macdonald_to_json(r, f));
  std::cout << "E_lambda n=" << c.n << ": " << r.E.size() << " terms, joint kernel dimension " << r.kernel_dim << '\n';
  bool ok = r.kernel_dim == 1;
  if (c.n >= 3) {
    WheelReport w = wheel_check(r.E, f, 20, c.seed);
    std::cout << "wheel vanishing at " << w.samples << " points: " << (w.ok ? "ok" : w.witness) << '\n';
    ok = ok && w.ok;
  }
  return status(ok);
}

int cmd_cm(const RunConfig& c) {
  Field f = macdonald_mode(c, c.n);
  require_range("cm-compare", c.n, 1, f.mode() == Mode::Symbolic ? 4 : 5,
                "n = 5 at rational s takes about five minutes");
  CmComparison r = cm_compare(f, c.n);
  Json rep{{"n", c.n}, {"s_mode", f.name()}, {"ok", r.ok}};
  if (r.kappa) rep["kappa"] = io::scalar_to_json(*r.kappa, f);
  if (!r.detail.empty()) rep["detail"] = r.detail;
  write(c, "cm_compare" + std::to_string(c.n) + ".json", rep);
  std::cout << "cm-compare n=" << c.n << ": " << (r.ok ? "kappa = " + r.kappa->str() : r.detail) << '\n';
  return status(r.ok);
}

int cmd_suite(const RunConfig& c) {
  require_range("suite", c.n_max, 1, 6);
  SuiteConfig s = suite_config(c, 0, c.n_max);
  auto results = run_suite(s);
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.pass();
    std::cout << (r.pass() ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title;
    if (!r.pass()) std::cout << " -- " << r.first_failure();
    std::cout << '\n';
  }
  write(c, "suite_summary.json", io::suite_summary(results, c.timing));
  return status(ok);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qKZ tower toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "symbolic | rational:p/q | cyclotomic");
    sub->add_option("--samples", cfg.samples, "Seeded samples for sampled identities")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--out", cfg.out, "Output directory")->capture_default_str();
    sub->add_flag("!--no-timing", cfg.timing, "Write zero millis for bit-identical summaries");
  };
  auto with_n = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Number of points")->required()->check(CLI::NonNegativeNumber);
    add_common(sub);
    return sub;
  };
  auto with_n_max = [&](CLI::App* sub) {
    sub->add_option("--n-max", cfg.n_max, "Largest size")->required()->check(CLI::NonNegativeNumber);
    add_common(sub);
    return sub;
  };

  std::map<CLI::App*, std::function<int()>> handlers;
  handlers[with_n(app.add_subcommand("solve", "Solve the qKZ system at q = t^{3/2} and write gN.json"))] = [&] {
    return cmd_solve(cfg);
  };
  auto* verify_cmd = app.add_subcommand("verify", "Verify a solution file exactly");
  verify_cmd->add_option("--in", cfg.in, "Solution JSON")->required()->check(CLI::ExistingFile);
  add_common(verify_cmd);
  handlers[verify_cmd] = [&] { return cmd_verify(cfg); };
  auto* oracle_cmd = with_n(app.add_subcommand("oracle", "Dense nullspace of the qKZ system"));
  oracle_cmd->add_option("--q", cfg.q, "Replace q by a rational p/q");
  handlers[oracle_cmd] = [&] { return cmd_oracle(cfg); };
  handlers[with_n_max(app.add_subcommand("tower-braid", "Braid recursion and phi matrices"))] = [&] {
    return cmd_tower(cfg, false);
  };
  handlers[with_n_max(app.add_subcommand("tower-dual", "Dual recursion and inverted phi matrices"))] = [&] {
    return cmd_tower(cfg, true);
  };
  handlers[with_n_max(app.add_subcommand("nu-check", "Arc insertion compatibility of the Hecke and TL towers"))] = [&] {
    return cmd_nu(cfg);
  };
  handlers[with_n(app.add_subcommand("transfer-check", "Transfer operator identities"))] = [&] {
    return cmd_transfer(cfg);
  };
  handlers[with_n(app.add_subcommand("o1-check", "Ground state of the O(1) transfer operator"))] = [&] {
    return cmd_o1(cfg);
  };
  handlers[with_n(app.add_subcommand("hecke-weights", "Weight vector and principal series checks"))] = [&] {
    return cmd_hecke_weights(cfg);
  };
  handlers[with_n(app.add_subcommand("macdonald", "E_lambda at q = t^{3/2} and its wheel vanishing"))] = [&] {
    return cmd_macdonald(cfg);
  };
  handlers[with_n(app.add_subcommand("cm-compare", "Compare the CM image of E_lambda with the solver"))] = [&] {
    return cmd_cm(cfg);
  };
  handlers[with_n_max(app.add_subcommand("suite", "Acceptance battery for n <= n-max"))] = [&] { return cmd_suite(cfg); };

  CLI11_PARSE(app, argc, argv);
  try {
    for (auto& [sub, run] : handlers)
      if (sub->parsed()) return run();
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return 2;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return EXIT_FAILURE;
}
