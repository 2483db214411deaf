#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qtower/scalar.hpp"

namespace qtower {

// Exponent vector packed 8 bits per variable, z_1 in the most significant
// byte, so integer order on keys is lexicographic order with z_1 > z_2 > ...
using MonoKey = std::uint64_t;

constexpr int kMaxVars = 8;
constexpr int kMaxExponent = 255;

inline int mono_exp(MonoKey k, int var) { return static_cast<int>((k >> (8 * (7 - var))) & 0xFFu); }
inline MonoKey mono_unit(int var) { return MonoKey{1} << (8 * (7 - var)); }
MonoKey mono_pack(const std::vector<int>& exps);
std::vector<int> mono_unpack(MonoKey k, int n);
int mono_degree(MonoKey k);

// Sparse polynomial in z_1..z_n over Scalar. Terms are kept sorted by
// increasing key with no zero coefficients; the last term is the
// lexicographic leading term.
class ZPoly {
 public:
  using Term = std::pair<MonoKey, Scalar>;

  ZPoly() = default;
  explicit ZPoly(int n) : n_(n) {}
  static ZPoly constant(int n, const Scalar& c);
  static ZPoly variable(int n, int var);  // var is 1-based
  static ZPoly monomial(int n, const std::vector<int>& exps, const Scalar& c);
  static ZPoly from_terms(int n, std::vector<Term> terms);

  int nvars() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(MonoKey k) const;

  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  int max_var_degree() const;

  ZPoly operator-() const;
  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  ZPoly& operator*=(const Scalar& c);
  friend ZPoly operator*(ZPoly a, const Scalar& c) { return a *= c; }
  friend ZPoly operator*(const Scalar& c, ZPoly a) { return a *= c; }
  // this += c * o
  void add_scaled(const ZPoly& o, const Scalar& c);

  // Exchange z_i and z_{i+1} (1-based i).
  ZPoly swap(int i) const;
  // f(z_2, ..., z_n, qinv * z_1)
  ZPoly rho_shift(const Scalar& qinv) const;
  // f(q * z_n, z_1, ..., z_{n-1}); inverse of rho_shift(q^{-1}).
  ZPoly rho_shift_inverse(const Scalar& q) const;
  // Substitute z_n = 0 and drop the last variable.
  ZPoly set_last_zero() const;
  // (z_1...z_n)^m f(1/z_1, ..., 1/z_n); throws if some exponent exceeds m.
  ZPoly invert_and_clear(int m) const;
  // Same polynomial viewed in n + extra variables (new variables appended).
  ZPoly extend(int extra) const;
  // Multiply by the monomial z^exps.
  ZPoly shifted(MonoKey k) const;

  // Exact quotient p / d; throws std::domain_error when d does not divide p.
  static ZPoly divide_exact(const ZPoly& p, const ZPoly& d);

  Scalar evaluate(const std::vector<Scalar>& point) const;
  ZPoly map_coeffs(const std::function<Scalar(const Scalar&)>& f) const;

  friend bool operator==(const ZPoly& a, const ZPoly& b);
  friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  void normalize();  // sort, merge, drop zeros
  int n_ = 0;
  std::vector<Term> terms_;
};

// prod_{i<j} (t^{1/2} z_j - t^{-1/2} z_i) in n variables.
ZPoly nested_product(const Field& f, int n);
// Linear form a*z_i + b*z_j (1-based indices).
ZPoly linear2(int n, int i, const Scalar& a, int j, const Scalar& b);

}  // namespace qtower
