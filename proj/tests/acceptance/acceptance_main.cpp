#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <vector>

#include "qtower/qkz.hpp"
#include "qtower/suite.hpp"

// Runs the acceptance battery and prints one PASS/FAIL line per criterion.
// Tolerances and sample counts are pinned in the suite module; the only
// floating-point check (column sums at the stochastic point) uses 1e-12.
int main(int argc, char** argv) {
  CLI::App app{"qtower acceptance battery"};
  std::vector<int> ids;
  bool verbose = false;
  app.add_option("--criterion,-c", ids, "Criteria to run (default: 1..12)")->check(CLI::Range(1, qtower::kCriterionCount));
  app.add_flag("--verbose,-v", verbose, "Print every check");
  CLI11_PARSE(app, argc, argv);

  qtower::SuiteConfig cfg;
  cfg.n_max = 6;
  cfg.samples = 10;
  cfg.seed = 0;
  cfg.threads = qtower::worker_threads();

  bool all_pass = true;
  for (const auto& c : qtower::run_suite(cfg, ids)) {
    bool pass = c.pass();
    all_pass = all_pass && pass;
    double total = 0;
    for (const auto& k : c.checks) total += k.millis;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << c.checks.size()
              << " checks, " << std::fixed << std::setprecision(0) << total << " ms)";
    if (!pass) std::cout << " -- " << c.first_failure();
    std::cout << '\n';
    for (const auto& k : c.checks) {
      bool show = verbose || !k.required || !k.ok;
      if (!show) continue;
      std::cout << "    " << (k.ok ? "ok  " : "FAIL") << (k.required ? "        " : " [info] ") << k.check;
      if (k.n >= 0) std::cout << " n=" << k.n;
      if (!k.detail.empty()) std::cout << ": " << k.detail;
      std::cout << '\n';
    }
  }
  return all_pass ? EXIT_SUCCESS : EXIT_FAILURE;
}
