#pragma once

#include <cstdint>
#include <string>

#include "qtower/transfer.hpp"
#include "qtower/tower.hpp"

namespace qtower {

struct SampledReport {
  bool ok = true;
  int samples = 0;
  std::string detail;  // first failure
};

// T^{(n)}(x; z_1..z_{n-1}, 0) phi_{n-1} = -t^{3/4} phi_{n-1} T^{(n-1)}(x; z_1..z_{n-1})
// at seeded random rational (s, x, z).
SampledReport tmat_conjugated_check(int n, int samples, std::uint64_t seed);

// [T(x), T(x')] = 0 and both RTT relations at seeded random rational points.
SampledReport transfer_commutation_check(int n, int samples, std::uint64_t seed);
SampledReport transfer_rtt_check(int n, int samples, std::uint64_t seed);

struct O1Report {
  bool ok = true;
  int n = 0;
  bool symbolic_x = true;
  int samples = 0;  // sampled x values when symbolic_x is false
  std::string detail;
};

// At s = zeta: cleared T(x; z) g^{(n)}(z) = prod_i (t^{1/2} z_i - t^{-1/2} x) g^{(n)}(z).
// With symbolic_x the identity is checked in n + 1 variables, otherwise at
// seeded rational values of x.
O1Report o1_groundstate_check(int n, bool symbolic_x, int samples = 10, std::uint64_t seed = 0);

}  // namespace qtower
