#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtower/linalg.hpp"
#include "qtower/qkz.hpp"
#include "qtower/tlrep.hpp"
#include "qtower/zpoly.hpp"

namespace qtower {

// Hecke parameter orientation of the basic representation: Plus uses
// k = t^{1/2}, Minus uses k = t^{-1/2}. In both cases
//   T_i = -k + (k z_i - k^{-1} z_{i+1}) / (z_{i+1} - z_i) (s_i - 1),
// T_i^{-1} = T_i + k - k^{-1}, rho f = f(z_2, ..., z_n, q^{-1} z_1).
enum class Orientation { Plus, Minus };

class BasicRep {
 public:
  BasicRep(const Field& f, int n, Scalar q, Orientation o = Orientation::Minus);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  const Scalar& q() const { return q_; }
  const Scalar& k() const { return k_; }
  Orientation orientation() const { return orientation_; }

  ZPoly T(int i, const ZPoly& f) const;
  ZPoly T_inv(int i, const ZPoly& f) const;
  ZPoly rho(const ZPoly& f) const;
  ZPoly rho_inv(const ZPoly& f) const;
  // Ybar_j = T_j ... T_{n-1} rho^{-1} T_1^{-1} ... T_{j-1}^{-1}
  ZPoly Ybar(int j, const ZPoly& f) const;
  // Y_j = T_{j-1}^{-1} ... T_1^{-1} rho T_{n-1} ... T_j
  ZPoly Y(int j, const ZPoly& f) const;
  // T_{w^{-1}}^{-1} f = T_{i_1}^{-1} ... T_{i_r}^{-1} f for a reduced word w = s_{i_1} ... s_{i_r}.
  ZPoly T_inv_of_inverse(const Perm& w, const ZPoly& f) const;

 private:
  Field field_;
  int n_;
  Scalar q_;
  Scalar k_;
  Scalar k_inv_;
  Orientation orientation_;
};

// (f - s_i f) / (z_i - z_{i+1}), computed monomial by monomial.
ZPoly divided_difference(const ZPoly& f, int i);

// All exponent vectors of total degree d in n variables, in increasing key order.
std::vector<MonoKey> monomials_of_degree(int n, int d);

// d_i(lambda) = 2 #{j > i : l_j = l_i} + 2 #{j : l_i > l_j} + 1 - n
std::vector<int> spectrum_exponents(const std::vector<int>& lambda);
// s_{lambda,i} = (-t^{-1/2})^{d_i} q^{lambda_i}
std::vector<Scalar> spectrum(const Field& f, const std::vector<int>& lambda, const Scalar& q);

// lambda^{(n)}: (n-2, n-4, ..., 0, n-1, n-3, ..., 1) for even n,
// (n-1, n-3, ..., 0, n-2, ..., 1) for odd n.
std::vector<int> lambda_n(int n);
// Longest element of the parabolic subgroup for I^{(n)}, as an image list.
Perm w0_parabolic(int n);
// c_n^{-1} (w0_parabolic gamma^{(n)}) at v = 1.
std::vector<Scalar> cm_spectral_point(const Field& f, int n);

// Neighbourhood test for lambda (pairs with rho(lambda)_i - rho(lambda)_j = 2
// and lambda_i - lambda_j <= 1, or = 2 with j < i).
bool has_neighbourhood(const std::vector<int>& lambda);
inline bool in_b23(const std::vector<int>& lambda) { return !has_neighbourhood(lambda); }
// Distinct permutations of lambda in lexicographic order.
std::vector<std::vector<int>> orbit(std::vector<int> lambda);
// (sigma lambda)_i = lambda_{sigma^{-1}(i)}
std::vector<int> permute_weight(const Perm& sigma, const std::vector<int>& lambda);

struct MacdonaldResult {
  std::vector<int> lambda;
  std::vector<Scalar> spec;
  int kernel_dim = 0;
  ZPoly E;  // monic in z^lambda when kernel_dim == 1
};

// Joint kernel of Ybar_j - s_{lambda,j} on the homogeneous component of
// degree |lambda|. Throws when the kernel is not 1-dimensional or the z^lambda
// coefficient vanishes, unless allow_degenerate is set.
MacdonaldResult macdonald_E(const BasicRep& rep, const std::vector<int>& lambda, bool allow_degenerate = false);
// Dimension of the joint kernel for an arbitrary spectral point.
int joint_kernel_dim(const BasicRep& rep, int degree, const std::vector<Scalar>& spec);

// E_{lambda^{(n)}} at q = t^{3/2} with the Minus orientation.
MacdonaldResult macdonald_lambda_n(const Field& f, int n);

struct WheelReport {
  bool ok = true;
  int samples = 0;
  std::string witness;
};
// Evaluates E on seeded random points of the (2,3)-wheel locus at q = t^{3/2}:
// z_{i_{a+1}} = z_{i_a} t_K q^{r_a}, r_1 + r_2 <= 1, i_a < i_{a+1} when r_a = 0.
// The locus is written in the Hecke parameter of the polynomial side,
// t_K^{1/2} = -t^{-1/2}, so t_K = t^{t_sign} with t_sign = -1 by default.
// Symbolic coefficients are specialized at a random rational s for every point.
WheelReport wheel_check(const ZPoly& E, const Field& f, int samples, std::uint64_t seed, int t_sign = -1);

// B_i E_lambda versus the stated multiple of E_{s_i lambda} (lambda_i > lambda_{i+1}).
struct BRelationReport {
  bool ok = false;
  std::string lhs_over_rhs;  // ratio when proportional
  std::string detail;
};
BRelationReport b_relation_check(const BasicRep& rep, const std::vector<int>& lambda, int i);

// CM map: sum over w in S_n^{I^{(n)}} of T_{w^{-1}}^{-1} T_{w0_parabolic}^{-1} f (x) T_w I_{w_n} Q_n
// with q = t^{3/2}, v = 1.
PolyVec cm_map(const Field& f, const ZPoly& E, int n);

struct CmComparison {
  bool ok = false;
  std::optional<Scalar> kappa;
  std::string detail;
};
// kappa_n = g_{L_cap} / CM(E)_{L_cap}; then kappa_n CM(E) == g componentwise.
CmComparison cm_compare(const Field& f, int n);

// Alternative characterization of Sol_n: pi(T_i) f = sigma(T_i^{-1}) f for
// 1 <= i < n and pi(rho) f = c sigma(rho^{-1}) f, pi with orientation Minus.
struct BasicRepReport {
  bool ok = true;
  std::string failing;  // "T_i" or "rho"
};
BasicRepReport verify_basic_rep(const QkzParams& p, const PolyVec& g);

}  // namespace qtower
