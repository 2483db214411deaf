#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qtower/linalg.hpp"
#include "qtower/pattern.hpp"
#include "qtower/scalar.hpp"
#include "qtower/zpoly.hpp"

namespace qtower {

enum class LoopWeight : std::uint8_t { One, Delta, U };

struct EImage {
  LoopWeight weight;
  Pattern pattern;
  int vpow = 0;  // twist picked up when the defect slides across the cut
};
struct RhoImage {
  int vpow;
  Pattern pattern;
};

// Action of e_i (1 <= i < n) on a single pattern.
EImage e_on_pattern(int i, const Pattern& p);
// Rotation by one step (dir = +1) or its inverse (dir = -1).
RhoImage rho_on_pattern(const Pattern& p, int dir);

struct Letter {
  enum Kind : std::uint8_t { E, T, TInv, Rho, RhoInv };
  Kind kind;
  int i = 0;
  static Letter e(int i) { return {E, i}; }
  static Letter t(int i) { return {T, i}; }
  static Letter tinv(int i) { return {TInv, i}; }
  static Letter rho() { return {Rho, 0}; }
  static Letter rho_inv() { return {RhoInv, 0}; }
};

// Scalar times a product of letters; letters[0] is the leftmost factor.
struct OpWord {
  Scalar coeff{1};
  std::vector<Letter> letters;
};

using Vec = std::vector<Scalar>;
using PolyVec = std::vector<ZPoly>;

inline void axpy(Scalar& acc, const Scalar& x, const Scalar& c) {
  if (!x.is_zero()) acc += x * c;
}
inline void axpy(ZPoly& acc, const ZPoly& x, const Scalar& c) { acc.add_scaled(x, c); }
inline Scalar zero_like(const Scalar&) { return Scalar(0); }
inline ZPoly zero_like(const ZPoly& p) { return ZPoly(p.nvars()); }

// V_n(v) as a module over the affine Temperley-Lieb algebra and, through
// T_i -> e_i + t^{-1/2}, over the affine Hecke algebra.
class TLModule {
 public:
  struct Entry {
    int target;
    Scalar coeff;
  };

  TLModule(const Field& f, int n);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  const Basis& basis() const { return *basis_; }
  int dim() const { return basis_->size(); }

  // Monomial matrix columns: generator applied to basis element j.
  // e index 0 stands for e_0 = rho e_{n-1} rho^{-1} (n >= 2).
  const Entry& e_entry(int i, int j) const { return e_[i][j]; }
  const Entry& rho_entry(int j, int dir) const { return dir > 0 ? rho_[j] : rho_inv_[j]; }

  Vec unit(int j) const;
  Vec unit(const Pattern& p) const { return unit(basis_->index(p)); }
  Vec zero() const { return Vec(dim(), field_.zero()); }

  template <class T>
  std::vector<T> apply_e(int i, const std::vector<T>& x) const {
    return apply_monomial(e_[check_e(i)], x);
  }
  template <class T>
  std::vector<T> apply_rho(const std::vector<T>& x, int dir = 1) const {
    return apply_monomial(dir > 0 ? rho_ : rho_inv_, x);
  }
  // psi(T_i) = e_i + t^{-1/2}, psi(T_i^{-1}) = e_i + t^{1/2}
  template <class T>
  std::vector<T> apply_T(int i, const std::vector<T>& x, bool inverse = false) const {
    std::vector<T> y = apply_e(i, x);
    const Scalar& c = inverse ? t_half_ : t_mhalf_;
    for (std::size_t j = 0; j < y.size(); ++j) axpy(y[j], x[j], c);
    return y;
  }
  template <class T>
  std::vector<T> apply_letter(const Letter& l, const std::vector<T>& x) const {
    switch (l.kind) {
      case Letter::E:
        return apply_e(l.i, x);
      case Letter::T:
        return apply_T(l.i, x, false);
      case Letter::TInv:
        return apply_T(l.i, x, true);
      case Letter::Rho:
        return apply_rho(x, 1);
      case Letter::RhoInv:
        return apply_rho(x, -1);
    }
    return x;
  }
  template <class T>
  std::vector<T> apply_word(const OpWord& w, std::vector<T> x) const {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) x = apply_letter(*it, x);
    if (!w.coeff.is_one())
      for (auto& c : x) c = scale(c, w.coeff);
    return x;
  }

  // psi(Y_j), psi(Y_j^{-1}), and Yhat_j = t^{-(2j-n-1)/4} psi(Y_j).
  Vec apply_Y(int j, const Vec& x) const;
  Vec apply_Y_inv(int j, const Vec& x) const;
  Vec apply_yhat(int j, const Vec& x) const;
  // Y^{alpha_i} = Y_i Y_{i+1}^{-1}
  Vec apply_Y_root(int i, const Vec& x) const;
  // I_i = T_i (1 - Y^{alpha_i}) + (t^{-1/2} - t^{1/2}) Y^{alpha_i}
  Vec apply_intertwiner(int i, const Vec& x) const;
  // I_w for a permutation given by its image list (w[0] = w(1), ...).
  Vec apply_intertwiner_perm(const std::vector<int>& w, const Vec& x) const;

  // Matrix of a linear operator on V_n from its action on basis vectors.
  Matrix matrix_of(const std::function<Vec(const Vec&)>& op) const;

  // Closure with caps (2i-1, 2i); odd n additionally joins point n to the
  // single outer point (evaluated with the twist set to 1).
  Scalar pair_close(const Vec& x) const;
  Scalar pair_close_pattern(const Pattern& p) const;

  Scalar weight_value(LoopWeight w) const;

 private:
  template <class T>
  std::vector<T> apply_monomial(const std::vector<Entry>& table, const std::vector<T>& x) const {
    std::vector<T> y;
    y.reserve(x.size());
    for (const auto& xi : x) y.push_back(zero_like(xi));
    for (std::size_t j = 0; j < x.size(); ++j) axpy(y[table[j].target], x[j], table[j].coeff);
    return y;
  }
  static Scalar scale(const Scalar& c, const Scalar& k) { return c * k; }
  static ZPoly scale(const ZPoly& c, const Scalar& k) { return c * k; }
  int check_e(int i) const;

  Field field_;
  int n_;
  const Basis* basis_;
  Scalar t_half_;
  Scalar t_mhalf_;
  std::vector<std::vector<Entry>> e_;  // e_[0] = e_0, e_[i] = e_i
  std::vector<Entry> rho_;
  std::vector<Entry> rho_inv_;
};

// Permutations are image lists w[0..n-1] with values 1..n.
using Perm = std::vector<int>;
Perm perm_identity(int n);
Perm perm_inverse(const Perm& w);
Perm perm_compose(const Perm& a, const Perm& b);  // (a b)(i) = a(b(i))
int perm_length(const Perm& w);
// Reduced word (i_1, ..., i_r) with w = s_{i_1} ... s_{i_r}.
std::vector<int> reduced_word(const Perm& w);
// (w xi)_i = xi_{w^{-1}(i)}
std::vector<Scalar> perm_act(const Perm& w, const std::vector<Scalar>& xi);
// Minimal coset representatives for the parabolic subgroup generated by
// I^{(n)} = {1..n}\{ceil(n/2)}: sigma(1)<...<sigma(ceil(n/2)) and the rest increasing.
std::vector<Perm> min_coset_reps(int n);
std::vector<int> parabolic_set(int n);  // I^{(n)}
Perm w_n_perm(int n);
std::vector<Perm> all_perms(int n);

// Weight data of V_n.
std::vector<Scalar> xi_hat(const Field& f, int n);
std::vector<Scalar> xi_weight(const Field& f, int n);
std::vector<Scalar> gamma_weight(const Field& f, int n);
// e_w(mu) = prod over inversions alpha of (t^{1/2} - t^{-1/2} mu^alpha)(t^{1/2} - t^{-1/2} mu^{-alpha}).
Scalar e_w_value(const Field& f, const Perm& w, const std::vector<Scalar>& mu);

// D_J (J as a bitmask over {1..floor(n/2)}, bit i-1 for i) and Q_n.
std::vector<Vec> build_DJ(const TLModule& m);
Vec build_Qn(const TLModule& m);
// sum_J t^{#J/4} v^{-#J} u^{#J} delta^{k-#J} for even n; the twisted variant for odd n.
Scalar pairing_formula(const Field& f, int n);

bool is_zero_vec(const Vec& x);
bool proportional(const Vec& x, const Vec& y, Scalar* ratio = nullptr);

}  // namespace qtower
