#include "qtower/scalar.hpp"

#include <sstream>

namespace qtower {

namespace {

const LaurentPoly& poly_one() {
  static const LaurentPoly one(Integer(1));
  return one;
}

// zeta^k as (a, b) meaning a + b*zeta, with zeta^2 = zeta - 1.
void zeta_power(int k, int& a, int& b) {
  static const int table[6][2] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  int r = ((k % 6) + 6) % 6;
  a = table[r][0];
  b = table[r][1];
}

void cyc_mul(const Rational& a, const Rational& b, const Rational& c, const Rational& d, Rational& ra,
             Rational& rb) {
  // (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2,  z^2 = z - 1
  Rational bd = b * d;
  ra = a * c - bd;
  rb = a * d + b * c + bd;
}

}  // namespace

Scalar Scalar::symbolic(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw std::domain_error("Scalar: zero denominator");
  Scalar x;
  x.kind_ = Kind::Sym;
  x.num_ = std::move(num);
  x.den_ = std::move(den);
  x.normalize_sym();
  return x;
}

Scalar Scalar::rational(Rational r) {
  Scalar x;
  x.kind_ = Kind::Rat;
  x.a_ = std::move(r);
  return x;
}

Scalar Scalar::cyclotomic(Rational a, Rational b) {
  Scalar x;
  x.kind_ = Kind::Cyc;
  x.a_ = std::move(a);
  x.b_ = std::move(b);
  return x;
}

void Scalar::normalize_sym() {
  if (num_.is_zero()) {
    den_ = poly_one();
    return;
  }
  if (den_.is_one()) return;
  if (den_.is_monomial()) {
    const auto& t = den_.lead();
    num_ = num_.shifted(-t.es, -t.ev);
    Integer k = t.c;
    if (k.sign() < 0) {
      k = -k;
      num_ = -num_;
    }
    if (!k.is_one()) {
      Integer g = Integer::gcd(num_.content(), k);
      if (!g.is_one()) {
        num_ = num_.divided_by_integer(g);
        k = Integer::div_exact(k, g);
      }
    }
    den_ = LaurentPoly(k);
    return;
  }
  LaurentPoly g = LaurentPoly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = LaurentPoly::div_exact(num_, g);
    den_ = LaurentPoly::div_exact(den_, g);
  }
  int ms = den_.min_es();
  int mv = den_.min_ev();
  if (ms != 0 || mv != 0) {
    num_ = num_.shifted(-ms, -mv);
    den_ = den_.shifted(-ms, -mv);
  }
  if (den_.lead().c.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool Scalar::is_zero() const {
  switch (kind_) {
    case Kind::Int:
    case Kind::Rat:
      return a_.is_zero();
    case Kind::Sym:
      return num_.is_zero();
    case Kind::Cyc:
      return a_.is_zero() && b_.is_zero();
  }
  return false;
}

bool Scalar::is_one() const {
  switch (kind_) {
    case Kind::Int:
    case Kind::Rat:
      return a_.is_one();
    case Kind::Sym:
      return num_.is_one() && den_.is_one();
    case Kind::Cyc:
      return a_.is_one() && b_.is_zero();
  }
  return false;
}

Scalar Scalar::promote(const Scalar& x, Kind to) {
  if (x.kind_ == to) return x;
  if (x.kind_ != Kind::Int) throw ModeMismatch("Scalar: mode mismatch");
  switch (to) {
    case Kind::Int:
      return x;
    case Kind::Rat:
      return rational(x.a_);
    case Kind::Cyc:
      return cyclotomic(x.a_, Rational(0));
    case Kind::Sym: {
      Scalar r;
      r.kind_ = Kind::Sym;
      r.num_ = LaurentPoly(x.a_.num());
      r.den_ = poly_one();
      return r;
    }
  }
  return x;
}

void Scalar::align(Scalar& a, Scalar& b) {
  if (a.kind_ == b.kind_) return;
  if (a.kind_ == Kind::Int) {
    a = promote(a, b.kind_);
  } else if (b.kind_ == Kind::Int) {
    b = promote(b, a.kind_);
  } else {
    throw ModeMismatch("Scalar: mode mismatch");
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  switch (kind_) {
    case Kind::Int:
    case Kind::Rat:
      r.a_ = -r.a_;
      break;
    case Kind::Sym:
      r.num_ = -r.num_;
      break;
    case Kind::Cyc:
      r.a_ = -r.a_;
      r.b_ = -r.b_;
      break;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    if (kind_ == Kind::Int || kind_ == o.kind_ || o.kind_ == Kind::Int) {
      Kind keep = kind_;
      *this = o;
      if (keep != Kind::Int && o.kind_ == Kind::Int) *this = promote(o, keep);
      return *this;
    }
    throw ModeMismatch("Scalar: mode mismatch");
  }
  Scalar rhs = o;
  align(*this, rhs);
  switch (kind_) {
    case Kind::Int:
    case Kind::Rat:
      a_ += rhs.a_;
      break;
    case Kind::Cyc:
      a_ += rhs.a_;
      b_ += rhs.b_;
      break;
    case Kind::Sym:
      if (den_ == rhs.den_) {
        num_ += rhs.num_;
        if (!den_.is_one()) normalize_sym();
        if (num_.is_zero()) den_ = poly_one();
      } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ = den_ * rhs.den_;
        normalize_sym();
      }
      break;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  Scalar rhs = o;
  align(*this, rhs);
  switch (kind_) {
    case Kind::Int:
    case Kind::Rat:
      a_ *= rhs.a_;
      break;
    case Kind::Cyc: {
      Rational ra;
      Rational rb;
      cyc_mul(a_, b_, rhs.a_, rhs.b_, ra, rb);
      a_ = std::move(ra);
      b_ = std::move(rb);
      break;
    }
    case Kind::Sym:
      if (num_.is_zero() || rhs.num_.is_zero()) {
        num_ = LaurentPoly();
        den_ = poly_one();
      } else if (den_.is_one() && rhs.den_.is_one()) {
        num_ = num_ * rhs.num_;
      } else {
        // Cross-cancel; each operand is already reduced.
        LaurentPoly a = num_;
        LaurentPoly b = den_;
        LaurentPoly c = rhs.num_;
        LaurentPoly d = rhs.den_;
        if (!d.is_one()) {
          LaurentPoly g = LaurentPoly::gcd(a, d);
          if (!g.is_one()) {
            a = LaurentPoly::div_exact(a, g);
            d = LaurentPoly::div_exact(d, g);
          }
        }
        if (!b.is_one()) {
          LaurentPoly g = LaurentPoly::gcd(c, b);
          if (!g.is_one()) {
            c = LaurentPoly::div_exact(c, g);
            b = LaurentPoly::div_exact(b, g);
          }
        }
        num_ = a * c;
        den_ = b * d;
        normalize_sym();
      }
      break;
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  switch (kind_) {
    case Kind::Int:
    case Kind::Rat: {
      Scalar r = *this;
      r.a_ = a_.inverse();
      return r;
    }
    case Kind::Cyc: {
      // (a + b z)^{-1} = (a + b - b z) / (a^2 + a b + b^2)
      Rational norm = a_ * a_ + a_ * b_ + b_ * b_;
      return cyclotomic((a_ + b_) / norm, -b_ / norm);
    }
    case Kind::Sym: {
      Scalar r;
      r.kind_ = Kind::Sym;
      r.num_ = den_;
      r.den_ = num_;
      // Already coprime; only the unit normalization of the denominator is needed.
      int ms = r.den_.min_es();
      int mv = r.den_.min_ev();
      r.num_ = r.num_.shifted(-ms, -mv);
      r.den_ = r.den_.shifted(-ms, -mv);
      if (r.den_.lead().c.sign() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
      }
      if (r.den_.is_monomial() && !r.den_.is_one()) r.normalize_sym();
      return r;
    }
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  Scalar inv = o.inverse();
  return *this *= inv;
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  if (kind_ == Kind::Sym && num_.is_monomial() && den_.is_one()) {
    const auto& t = num_.lead();
    return symbolic(LaurentPoly(Integer::pow(t.c, static_cast<unsigned>(e)), t.es * e, t.ev * e));
  }
  Scalar result(1);
  Scalar base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.kind_ == b.kind_) {
    switch (a.kind_) {
      case Scalar::Kind::Int:
      case Scalar::Kind::Rat:
        return a.a_ == b.a_;
      case Scalar::Kind::Cyc:
        return a.a_ == b.a_ && a.b_ == b.b_;
      case Scalar::Kind::Sym:
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
  }
  Scalar x = a;
  Scalar y = b;
  Scalar::align(x, y);
  return x == y;
}

Scalar Scalar::invert_s() const {
  switch (kind_) {
    case Kind::Int:
      return *this;
    case Kind::Sym:
      return symbolic(num_.invert_s(), den_.invert_s());
    default:
      throw std::logic_error("Scalar: s -> 1/s is only available on symbolic scalars");
  }
}

std::string Scalar::str() const {
  switch (kind_) {
    case Kind::Int:
    case Kind::Rat:
      return a_.str();
    case Kind::Cyc:
      return "(" + a_.str() + ") + (" + b_.str() + ")*zeta";
    case Kind::Sym:
      if (den_.is_one()) return num_.str();
      return "(" + num_.str() + ")/(" + den_.str() + ")";
  }
  return "?";
}

Field Field::with_unit_twist() const {
  Field f = *this;
  f.v0_ = Rational(1);
  f.v_free_ = false;
  return f;
}

Field Field::parse(const std::string& spec) {
  if (spec == "symbolic") return symbolic();
  if (spec == "cyclotomic") return cyclotomic();
  const std::string prefix = "rational:";
  if (spec.rfind(prefix, 0) == 0) {
    Rational s0 = Rational::parse(spec.substr(prefix.size()));
    if (s0.is_zero()) throw std::invalid_argument("Field: s0 must be nonzero");
    return rational_s(s0);
  }
  throw std::invalid_argument("Field: unknown mode '" + spec + "' (symbolic | rational:p/q | cyclotomic)");
}

std::string Field::name() const {
  switch (mode_) {
    case Mode::Symbolic:
      return v_free_ ? "symbolic" : "symbolic,v=1";
    case Mode::Cyclotomic:
      return "cyclotomic";
    case Mode::RationalS:
      if (v0_.is_one()) return "rational:" + s0_.str();
      return "rational:" + s0_.str() + ",v=" + v0_.str();
  }
  return "?";
}

Scalar Field::integer(long long k) const {
  switch (mode_) {
    case Mode::Symbolic:
      return Scalar::symbolic(LaurentPoly(Integer(k)));
    case Mode::RationalS:
      return Scalar::rational(Rational(k));
    case Mode::Cyclotomic:
      return Scalar::cyclotomic(Rational(k), Rational(0));
  }
  return Scalar(k);
}

Scalar Field::s_pow(int k) const {
  switch (mode_) {
    case Mode::Symbolic:
      return Scalar::symbolic(LaurentPoly(Integer(1), k, 0));
    case Mode::RationalS:
      return Scalar::rational(Rational::pow(s0_, k));
    case Mode::Cyclotomic: {
      int a = 0;
      int b = 0;
      zeta_power(k, a, b);
      return Scalar::cyclotomic(Rational(a), Rational(b));
    }
  }
  return Scalar(1);
}

Scalar Field::v_pow(int k) const {
  switch (mode_) {
    case Mode::Symbolic:
      if (!v_free_) return one();
      return Scalar::symbolic(LaurentPoly(Integer(1), 0, k));
    case Mode::RationalS:
      return Scalar::rational(Rational::pow(v0_, k));
    case Mode::Cyclotomic:
      return one();
  }
  return Scalar(1);
}

Scalar Field::delta() const { return -(s_pow(2) + s_pow(-2)); }

Scalar Field::u() const { return s_pow(1) * v_pow(1) + s_pow(-1) * v_pow(-1); }

Scalar Field::embed(const Scalar& x) const {
  using Kind = Scalar::Kind;
  switch (x.kind()) {
    case Kind::Int:
      return integer(0) + x;
    case Kind::Rat:
      if (mode_ != Mode::RationalS) throw ModeMismatch("Field: cannot embed a rational-s scalar");
      return x;
    case Kind::Cyc:
      if (mode_ != Mode::Cyclotomic) throw ModeMismatch("Field: cannot embed a cyclotomic scalar");
      return x;
    case Kind::Sym:
      break;
  }
  if (mode_ == Mode::Symbolic) return x;
  if (mode_ == Mode::RationalS) {
    Rational n = x.num().evaluate(s0_, v0_);
    Rational d = x.den().evaluate(s0_, v0_);
    if (d.is_zero()) throw std::domain_error("Field: denominator vanishes at s0");
    return Scalar::rational(n / d);
  }
  auto eval_zeta = [](const LaurentPoly& p) {
    Rational a(0);
    Rational b(0);
    for (const auto& t : p.terms()) {
      int za = 0;
      int zb = 0;
      zeta_power(t.es, za, zb);
      a += Rational(t.c) * Rational(za);
      b += Rational(t.c) * Rational(zb);
    }
    return Scalar::cyclotomic(a, b);
  };
  Scalar d = eval_zeta(x.den());
  if (d.is_zero()) throw std::domain_error("Field: denominator vanishes at zeta");
  return eval_zeta(x.num()) / d;
}

}  // namespace qtower
