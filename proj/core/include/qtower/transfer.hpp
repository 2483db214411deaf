#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qtower/linalg.hpp"
#include "qtower/pattern.hpp"
#include "qtower/tlrep.hpp"
#include "qtower/zpoly.hpp"

namespace qtower {

// Strand diagram on an annulus with n inner points (glued to a pattern)
// and n outer points. Endpoint ids: inner j -> j-1, outer j -> n+j-1.
// ray[g] lists, with multiplicity, one endpoint of each strand piece that
// crosses the radial segment through gap g (gap 0 between n and 1).
struct Layer {
  int n = 0;
  std::vector<int> link;
  std::vector<std::vector<int>> ray;
};

inline int inner_end(int j) { return j - 1; }
inline int outer_end(int n, int j) { return n + j - 1; }

struct Composite {
  int delta_loops = 0;
  int u_loops = 0;
  Pattern pattern;
};

// Glues the layer on top of the pattern (pattern on the inner side) and
// reads off the outer pattern. Closed loops crossing the puncture ray an
// odd number of times encircle the puncture. Twist v is taken to be 1.
Composite compose_layer(const Layer& layer, const Pattern& p);

Layer e_layer(int n, int i);      // cap on inner (i,i+1), cup on outer (i,i+1)
Layer rho_layer(int n, int dir);  // inner j -> outer j+dir
// Row of tiles; bit i-1 of ne_mask selects the ne tile at position i.
// Tile nw joins N-W and E-S, tile ne joins N-E and W-S; E_i = W_{i+1}.
Layer row_layer(int n, std::uint32_t ne_mask);

// a(y) = (y-1)/(t^{1/2}-t^{-1/2}y), b(y) = (t^{1/2}y-t^{-1/2})/(t^{1/2}-t^{-1/2}y)
Scalar weight_a(const Field& f, const Scalar& y);
Scalar weight_b(const Field& f, const Scalar& y);

// Transfer operator of the dense loop model on V_n at v = 1.
class TransferOperator {
 public:
  TransferOperator(const Field& f, int n);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_->size()); }
  const TLModule::Entry& row_entry(std::uint32_t mask, int j) const { return rows_[mask][j]; }

  // sum over rows of prod_i (ne_i ? ne[i] : nw[i]) times the row action.
  Matrix with_tile_weights(const std::vector<Scalar>& nw, const std::vector<Scalar>& ne) const;
  // T(x; z) with tile weights a(x/z_i), b(x/z_i).
  Matrix evaluate(const Scalar& x, const std::vector<Scalar>& z) const;
  // T(x; z_1, ..., z_{n-1}, 0): last tile takes the limits -t^{1/2}, -t.
  Matrix evaluate_last_zero(const Scalar& x, const std::vector<Scalar>& z_head) const;
  // prod_i (t^{1/2} z_i - t^{-1/2} x) T(x; z) as polynomials in z_1..z_n and x = z_{n+1}.
  const std::vector<std::vector<ZPoly>>& cleared() const;
  // Cleared operator applied to g(z); result in n+1 variables (x last).
  PolyVec apply_cleared(const PolyVec& g) const;
  // Same with x replaced by a scalar; result in n variables.
  PolyVec apply_cleared(const PolyVec& g, const Scalar& x) const;
  // prod_i (t^{1/2} z_i - t^{-1/2} x) in n+1 variables.
  ZPoly clearing_factor() const;

 private:
  Field field_;
  int n_;
  const Basis* basis_;
  std::vector<std::vector<TLModule::Entry>> rows_;
  mutable std::vector<std::vector<ZPoly>> cleared_;
  mutable bool cleared_ready_ = false;
};

// Floating point matrix A(x; z) at t^{1/4} = exp(i pi/3) with x/z_j = exp(i theta_j).
std::vector<std::vector<std::complex<double>>> o1_float_matrix(int n, const std::vector<double>& theta);

struct StochasticReport {
  int samples = 0;
  double max_column_deviation = 0;
  double min_real_entry = 0;
  double max_imag_entry = 0;
  bool ok = false;
};
// Samples theta_j uniformly in (0, 2 pi / 3).
StochasticReport stochastic_check(int n, int samples, std::uint64_t seed, double tol = 1e-12);

}  // namespace qtower
