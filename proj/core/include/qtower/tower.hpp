#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtower/qkz.hpp"
#include "qtower/tlrep.hpp"

namespace qtower {

enum class Variant { Plain, Iota };  // Iota: t^{1/4} -> t^{-1/4} in lifts and base image

// For every pattern L of V_n a word w_L in e_1..e_{n-1}, rho^{+-1} with
// w_L(base) = sigma_L L, base = least_nested(n). Computed at v = 1.
struct Factorization {
  int n = 0;
  std::vector<OpWord> words;    // indexed like Basis::of(n)
  std::vector<Scalar> scalars;  // sigma_L
};

// Breadth-first search from the base pattern. With a seed the order in which
// generators are tried is shuffled at every node.
Factorization factorize(const Field& f, int n, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

// Letter-wise image under the arc insertion I_n, expanded into a sum of
// words on V_{n+1}:
//   e_i -> e_i, rho -> rho (t^{-1/4} e_n + t^{1/4}), rho^{-1} -> (t^{1/4} e_n + t^{-1/4}) rho^{-1}.
std::vector<OpWord> lift_word(const Field& f, const OpWord& w, int n, Variant variant = Variant::Plain);

// Applies I_n(w) on V_{n+1} letter by letter (same operator as the expanded sum).
Vec apply_lifted(const TLModule& big, const OpWord& w, const Vec& x, Variant variant = Variant::Plain);
// I_n(letter) on V_{n+1}.
Vec apply_lifted_letter(const TLModule& big, const Letter& l, const Vec& x, Variant variant = Variant::Plain);

// Image of the base pattern of V_n in V_{n+1}.
Vec phi_base_image(const TLModule& big, Variant variant = Variant::Plain);

struct PhiMatrix {
  int n = 0;
  Variant variant = Variant::Plain;
  Field field = Field::symbolic().with_unit_twist();
  Matrix m;  // dim V_{n+1} rows, dim V_n columns

  Vec apply(const Vec& x) const;
  PolyVec apply(const PolyVec& g, int nvars) const;
};

PhiMatrix phi(const Field& f, int n, Variant variant = Variant::Plain, const Factorization* table = nullptr);

struct CheckReport {
  bool ok = true;
  std::string detail;  // first failure
};

// phi_n sigma_n(h) = sigma_{n+1}(I_n(h)) phi_n for h in e_1..e_{n-1}, rho, rho^{-1}.
CheckReport check_intertwining(const PhiMatrix& p);
// Coefficient of L_cap^{(n+1)} in phi_n(L) equals t^{-floor(n/2)/4} delta_{L, L_cap^{(n)}}.
CheckReport check_nested_coefficient(const PhiMatrix& p);

// psi_{n+1}(nu_n(h)) = I_n(psi_n(h)) on V_{n+1} for the generators of H_n.
CheckReport nu_diagram_check(const Field& f, int n);

struct RecursionStep {
  int n = 0;              // relates g^{(n)} and g^{(n+1)}
  bool literal_ok = false;  // with the stated scalar
  bool proportional = false;
  std::string ratio;      // LHS / (z_1...z_n phi_n(g^{(n)})) when proportional
  std::string expected;   // stated scalar
  bool side_condition_ok = false;  // restricted system (braid) or inverted system (dual)
  std::string detail;
};

// g^{(n+1)}(z, 0) = t^{(floor(n/2) - 2n)/4} z_1...z_n phi_n(g^{(n)}(z)) for n = 0..n_max.
std::vector<RecursionStep> braid_verify(const Field& f, int n_max);
// O(1) forms at t^{1/4} = exp(i pi / 3):
//   g^{(2k)}(z, 0) = (-1)^k t^{-1/2} z_1...z_{2k-1} phi(g^{(2k-1)}), g^{(2k+1)}(z, 0) = (-1)^k z_1...z_{2k} phi(g^{(2k)}).
std::vector<RecursionStep> braid_verify_zeta(int n_max);

// gt^{(n)} = (z_1...z_n)^{n-1} g^{(n)}(1/z);
// gt^{(n+1)}(z, 0) = t^{(2n - floor(n/2))/4} z_1...z_n phi^iota_n(gt^{(n)}).
PolyVec dual_transform(const PolyVec& g, int n);
std::vector<RecursionStep> dual_verify(const Field& f, int n_max);

// Applies a dense matrix to a vector of polynomials.
PolyVec apply_matrix(const Matrix& m, const PolyVec& g, int nvars);

}  // namespace qtower
