#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qtower/linalg.hpp"
#include "qtower/tlrep.hpp"
#include "qtower/zpoly.hpp"

namespace qtower {

// Parameters of the tower solution g^{(n)}: q = t^{3/2}, c_n = (-t^{-3/4})^{n-1}.
struct QkzParams {
  Field field;
  int n = 0;
  Scalar q;
  Scalar c;

  static QkzParams standard(const Field& f, int n);
  static Scalar c_value(const Field& f, int n);  // c_0 = t^{1/4} + t^{-1/4}
  Scalar lambda() const { return q.inverse(); }
  // t^{(floor(n/2) - 2n)/4}, the scalar in h^{(n)}(z) = (.) z_1 ... z_n
  static Scalar h_scalar(const Field& f, int n);
  static ZPoly h_poly(const Field& f, int n);
};

// A qKZ system: the module V_points acting on vectors of polynomials in
// nvars variables. Standard: points == nvars and rho acts as rho.
// Restricted: points == nvars + 1, only e_1..e_{nvars-1} enter, and rho acts
// as rho (t^{-1/4} e_nvars + t^{1/4}).
// Inverted: the R-weights use t^{-1/4} in place of t^{1/4} and the rho
// equation shifts z_1 -> q z_1 instead of q^{-1} z_1.
class QkzSystem {
 public:
  enum class Kind { Standard, Restricted };

  QkzSystem(const Field& f, int points, int nvars, Scalar q, Scalar c, Kind kind = Kind::Standard,
            bool inverted = false);
  static QkzSystem standard(const QkzParams& p);
  // Restricted module V_{n+1} in n variables with c = (-t^{-3/4})^{n+1}.
  static QkzSystem restricted(const Field& f, int n);
  // Standard module with inverted weights, q -> q^{-1} in the shift and
  // c = (-t^{3/4})^{n-1}.
  static QkzSystem inverted_standard(const Field& f, int n);

  const Field& field() const { return field_; }
  int points() const { return points_; }
  int nvars() const { return nvars_; }
  Kind kind() const { return kind_; }
  bool inverted() const { return inverted_; }
  const Scalar& q() const { return q_; }
  const Scalar& c() const { return c_; }
  const TLModule& module() const { return *module_; }
  int dim() const { return module_->dim(); }

  // Scalar multiplying z_1 in the rho shift.
  Scalar shift_scalar() const;
  // Number of R-equations.
  int r_count() const { return nvars_ > 0 ? nvars_ - 1 : 0; }

  // Cleared sides of R_i(z_{i+1}/z_i) f(s_i z) = f(z), both multiplied by
  // (t^{1/2} z_i - t^{-1/2} z_{i+1}) (with t^{1/4} inverted if applicable).
  PolyVec r_lhs(int i, const PolyVec& f) const;
  PolyVec r_rhs(int i, const PolyVec& f) const;
  PolyVec r_residual(int i, const PolyVec& f) const;
  // rho_op f(z_2, ..., z_n, shift * z_1) - c f(z)
  PolyVec rho_residual(const PolyVec& f) const;
  PolyVec apply_rho_op(const PolyVec& f) const;

 private:
  Field field_;
  int points_;
  int nvars_;
  Scalar q_;
  Scalar c_;
  Kind kind_;
  bool inverted_;
  std::shared_ptr<const TLModule> module_;
};

struct VerifyReport {
  bool ok = true;
  bool homogeneous = true;
  int degree = -1;
  std::string equation;  // "R_i", "rho", "homogeneity", "nested"
  std::string component;
  std::string witness;   // monomial and coefficient of the first nonzero residual term
  std::string message() const;
};

// Checks every cleared R-equation and the rho-equation exactly. For the
// standard system also checks homogeneity and the exchange identity of the
// fully nested component.
VerifyReport verify(const QkzSystem& sys, const PolyVec& f);

// Reconstructs the solution from g_{L_cap} = seed (default: the nested
// product) by rotation into the stratum touching gap 0, Dyck-path collapse
// and rotation outward. Throws std::domain_error on inexact division.
// With check = true the result is verified and a failure throws.
PolyVec solve(const QkzParams& p, bool check = true);
PolyVec solve_seeded(const QkzParams& p, const ZPoly& seed, bool check = true);

// Exact basis of all solutions whose components are homogeneous of degree d.
std::vector<PolyVec> nullspace_oracle(const QkzSystem& sys, int degree);

// Projective comparison: returns the scalar k with a = k b, if any.
std::optional<Scalar> proportional(const PolyVec& a, const PolyVec& b);

// R_i(x) = a(x) e_i + b(x) as a matrix on V_n.
Matrix r_matrix(const TLModule& m, int i, const Scalar& x);

// Number of worker threads for verification (QTOWER_THREADS, default 1).
int worker_threads();

}  // namespace qtower
