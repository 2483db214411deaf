#pragma once

#include <string>

#include "qtower/integer.hpp"

namespace qtower {

// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : num_(n) {}        // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer n, Integer d);

  // Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& text);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integer() const { return den_.is_one(); }
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inverse() const;
  static Rational pow(const Rational& a, int e);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  static int cmp(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }

  std::string str() const;
  double to_double() const;

 private:
  void normalize();
  Integer num_{0};
  Integer den_{1};
};

}  // namespace qtower
