#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qtower {

struct CheckResult {
  std::string check;
  int n = -1;  // -1 when the check is not tied to a single size
  bool ok = false;
  bool required = true;  // informational checks do not decide the criterion
  double millis = 0;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<CheckResult> checks;

  bool pass() const;
  // First failing required check, or an empty string.
  std::string first_failure() const;
};

struct SuiteConfig {
  int n_max = 6;          // caps every size range below its default
  int n_min = 0;          // drops single-size checks below this size
  std::vector<std::string> only;  // task labels to keep; empty keeps all
  int samples = 10;       // seeded samples for sampled identities
  std::uint64_t seed = 0;
  int threads = 1;
};

constexpr int kCriterionCount = 12;

std::string criterion_title(int id);

// Tasks of a criterion run on a worker pool; results are kept in task order.
CriterionResult run_criterion(int id, const SuiteConfig& cfg);
std::vector<CriterionResult> run_suite(const SuiteConfig& cfg, const std::vector<int>& ids = {});

// Fixed pool over independent jobs; job k writes only slot k.
void run_parallel(int count, int threads, const std::function<void(int)>& job);

}  // namespace qtower
