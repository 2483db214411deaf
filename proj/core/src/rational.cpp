#include "qtower/rational.hpp"

#include <stdexcept>

namespace qtower {

Rational::Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  normalize();
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(Integer(text));
  return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (den_.is_one()) return;
  Integer g = Integer::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = Integer::div_exact(num_, g);
    den_ = Integer::div_exact(den_, g);
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational Rational::inverse() const {
  if (num_.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(den_, num_);
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

Rational Rational::pow(const Rational& a, int e) {
  if (e < 0) return pow(a.inverse(), -e);
  Rational r(1);
  r.num_ = Integer::pow(a.num_, static_cast<unsigned>(e));
  r.den_ = Integer::pow(a.den_, static_cast<unsigned>(e));
  return r;
}

int Rational::cmp(const Rational& a, const Rational& b) {
  return Integer::cmp(a.num_ * b.den_, b.num_ * a.den_);
}

std::string Rational::str() const {
  if (den_.is_one()) return num_.str();
  return num_.str() + "/" + den_.str();
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

}  // namespace qtower
