#pragma once

#include <stdexcept>
#include <string>

#include "qtower/laurent.hpp"
#include "qtower/rational.hpp"

namespace qtower {

enum class Mode { Symbolic, RationalS, Cyclotomic };

class ModeMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exact scalar. Symbolic scalars are reduced fractions of integer Laurent
// polynomials in s = t^{1/4} and v; rational-s scalars are rationals obtained
// by substituting s = s0, v = v0; cyclotomic scalars are a + b*zeta with
// zeta^2 = zeta - 1 (s = zeta = exp(i*pi/3), v = 1).
//
// Plain integers built from int literals are mode-free and combine with any
// mode; combining two different concrete modes throws ModeMismatch.
class Scalar {
 public:
  enum class Kind : unsigned char { Int, Sym, Rat, Cyc };

  Scalar() = default;
  Scalar(long long k) : a_(k) {}  // NOLINT(google-explicit-constructor)
  Scalar(int k) : a_(k) {}        // NOLINT(google-explicit-constructor)

  static Scalar symbolic(LaurentPoly num, LaurentPoly den = LaurentPoly(Integer(1)));
  static Scalar rational(Rational r);
  static Scalar cyclotomic(Rational a, Rational b);

  Kind kind() const { return kind_; }
  bool is_zero() const;
  bool is_one() const;

  // Accessors; valid only for the matching kind (Int counts as Rat for
  // rational() and as Cyc with b = 0 for cyc_a()/cyc_b()).
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  const Rational& rat() const { return a_; }
  const Rational& cyc_a() const { return a_; }
  const Rational& cyc_b() const { return b_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(int e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Substitution s -> 1/s on symbolic scalars; identity on the other kinds
  // only when they are plain integers (throws otherwise).
  Scalar invert_s() const;

  std::string str() const;

 private:
  static Scalar promote(const Scalar& x, Kind to);
  static void align(Scalar& a, Scalar& b);
  void normalize_sym();

  Kind kind_ = Kind::Int;
  Rational a_;
  Rational b_;
  LaurentPoly num_;
  LaurentPoly den_;
};

// Scalar context: selects the mode and supplies the named constants.
class Field {
 public:
  static Field symbolic() { return Field(Mode::Symbolic, Rational(0), Rational(1)); }
  static Field rational_s(Rational s0, Rational v0 = Rational(1)) {
    return Field(Mode::RationalS, std::move(s0), std::move(v0));
  }
  static Field cyclotomic() { return Field(Mode::Cyclotomic, Rational(0), Rational(1)); }
  // Same field with the twist v fixed to 1.
  Field with_unit_twist() const;
  bool unit_twist() const { return mode_ == Mode::Symbolic ? !v_free_ : v0_.is_one(); }
  // Accepts "symbolic", "cyclotomic", "rational:p/q".
  static Field parse(const std::string& spec);

  Mode mode() const { return mode_; }
  const Rational& s0() const { return s0_; }
  const Rational& v0() const { return v0_; }
  std::string name() const;

  Scalar integer(long long k) const;
  Scalar zero() const { return integer(0); }
  Scalar one() const { return integer(1); }
  // s^k = t^{k/4}
  Scalar s_pow(int k) const;
  Scalar v_pow(int k) const;
  Scalar t_pow4(int quarter_exponent) const { return s_pow(quarter_exponent); }
  Scalar delta() const;  // -t^{1/2} - t^{-1/2}
  Scalar u() const;      // t^{1/4} v + t^{-1/4} v^{-1}
  Scalar q() const { return s_pow(6); }

  // Image of a scalar of any kind in this field. Symbolic scalars are
  // evaluated at (s0, v0) or at zeta; scalars already in this mode pass through.
  Scalar embed(const Scalar& x) const;

 private:
  Field(Mode m, Rational s0, Rational v0) : mode_(m), s0_(std::move(s0)), v0_(std::move(v0)) {}
  Mode mode_;
  Rational s0_;
  Rational v0_;
  bool v_free_ = true;  // symbolic mode only
};

}  // namespace qtower
