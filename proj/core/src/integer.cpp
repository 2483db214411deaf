#include "qtower/integer.hpp"

#include <climits>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace qtower {

namespace {

struct Mpz {
  mpz_t v;
  Mpz() { mpz_init(v); }
  ~Mpz() { mpz_clear(v); }
  Mpz(const Mpz&) = delete;
  Mpz& operator=(const Mpz&) = delete;
};

void set_ll(mpz_t out, long long x) {
  if (x >= LONG_MIN && x <= LONG_MAX) {
    mpz_set_si(out, static_cast<long>(x));
    return;
  }
  // long is 64-bit on the supported platforms; keep a portable fallback.
  mpz_set_si(out, static_cast<long>(x >> 32));
  mpz_mul_2exp(out, out, 32);
  mpz_add_ui(out, out, static_cast<unsigned long>(x & 0xffffffffLL));
}

}  // namespace

Integer::Integer(const std::string& decimal) {
  Mpz t;
  if (mpz_set_str(t.v, decimal.c_str(), 10) != 0) {
    throw std::invalid_argument("Integer: bad decimal literal '" + decimal + "'");
  }
  assign_mpz(t.v);
}

Integer::Integer(const Integer& o) : small_(o.small_) {
  if (o.big_) {
    big_ = new mpz_t[1];
    mpz_init_set(*big_, *o.big_);
  }
}

Integer& Integer::operator=(const Integer& o) {
  if (this == &o) return *this;
  if (o.big_) {
    if (!big_) {
      big_ = new mpz_t[1];
      mpz_init(*big_);
    }
    mpz_set(*big_, *o.big_);
  } else {
    release();
    small_ = o.small_;
  }
  return *this;
}

Integer& Integer::operator=(Integer&& o) noexcept {
  if (this == &o) return *this;
  release();
  small_ = o.small_;
  big_ = o.big_;
  o.big_ = nullptr;
  return *this;
}

Integer::~Integer() { release(); }

void Integer::release() {
  if (big_) {
    mpz_clear(*big_);
    delete[] big_;
    big_ = nullptr;
  }
}

void Integer::to_mpz(mpz_t out) const {
  if (big_) {
    mpz_set(out, *big_);
  } else {
    set_ll(out, small_);
  }
}

void Integer::assign_mpz(const mpz_t v) {
  if (mpz_fits_slong_p(v)) {
    release();
    small_ = mpz_get_si(v);
    return;
  }
  if (!big_) {
    big_ = new mpz_t[1];
    mpz_init(*big_);
  }
  mpz_set(*big_, v);
  small_ = 0;
}

int Integer::sign() const {
  if (big_) return mpz_sgn(*big_);
  return (small_ > 0) - (small_ < 0);
}

Integer Integer::operator-() const {
  if (!big_ && small_ != LLONG_MIN) return Integer(-small_);
  Mpz a;
  to_mpz(a.v);
  mpz_neg(a.v, a.v);
  Integer r;
  r.assign_mpz(a.v);
  return r;
}

Integer& Integer::operator+=(const Integer& o) {
  long long out;
  if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &out)) {
    small_ = out;
    return *this;
  }
  Mpz a, b;
  to_mpz(a.v);
  o.to_mpz(b.v);
  mpz_add(a.v, a.v, b.v);
  assign_mpz(a.v);
  return *this;
}

Integer& Integer::operator-=(const Integer& o) {
  long long out;
  if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &out)) {
    small_ = out;
    return *this;
  }
  Mpz a, b;
  to_mpz(a.v);
  o.to_mpz(b.v);
  mpz_sub(a.v, a.v, b.v);
  assign_mpz(a.v);
  return *this;
}

Integer& Integer::operator*=(const Integer& o) {
  long long out;
  if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &out)) {
    small_ = out;
    return *this;
  }
  Mpz a, b;
  to_mpz(a.v);
  o.to_mpz(b.v);
  mpz_mul(a.v, a.v, b.v);
  assign_mpz(a.v);
  return *this;
}

Integer Integer::div_exact(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("Integer: division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == LLONG_MIN && b.small_ == -1)) {
    if (a.small_ % b.small_ != 0) throw std::domain_error("Integer: inexact division");
    return Integer(a.small_ / b.small_);
  }
  Mpz x, y;
  a.to_mpz(x.v);
  b.to_mpz(y.v);
  if (!mpz_divisible_p(x.v, y.v)) throw std::domain_error("Integer: inexact division");
  mpz_divexact(x.v, x.v, y.v);
  Integer r;
  r.assign_mpz(x.v);
  return r;
}

void Integer::div_rem(const Integer& a, const Integer& b, Integer& q, Integer& r) {
  if (b.is_zero()) throw std::domain_error("Integer: division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == LLONG_MIN && b.small_ == -1)) {
    long long qq = a.small_ / b.small_;
    long long rr = a.small_ % b.small_;
    q = Integer(qq);
    r = Integer(rr);
    return;
  }
  Mpz x, y, qq, rr;
  a.to_mpz(x.v);
  b.to_mpz(y.v);
  mpz_tdiv_qr(qq.v, rr.v, x.v, y.v);
  q.assign_mpz(qq.v);
  r.assign_mpz(rr.v);
}

Integer Integer::gcd(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_ && a.small_ != LLONG_MIN && b.small_ != LLONG_MIN) {
    long long x = a.small_ < 0 ? -a.small_ : a.small_;
    long long y = b.small_ < 0 ? -b.small_ : b.small_;
    while (y != 0) {
      long long t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  Mpz x, y;
  a.to_mpz(x.v);
  b.to_mpz(y.v);
  mpz_gcd(x.v, x.v, y.v);
  Integer r;
  r.assign_mpz(x.v);
  return r;
}

Integer Integer::pow(const Integer& a, unsigned e) {
  Integer result(1);
  Integer base = a;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

int Integer::cmp(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return (a.small_ > b.small_) - (a.small_ < b.small_);
  Mpz x, y;
  a.to_mpz(x.v);
  b.to_mpz(y.v);
  int c = mpz_cmp(x.v, y.v);
  return (c > 0) - (c < 0);
}

std::string Integer::str() const {
  if (!big_) return std::to_string(small_);
  std::string out(mpz_sizeinbase(*big_, 10) + 2, '\0');
  mpz_get_str(out.data(), 10, *big_);
  out.resize(std::char_traits<char>::length(out.c_str()));
  return out;
}

double Integer::to_double() const {
  if (!big_) return static_cast<double>(small_);
  return mpz_get_d(*big_);
}

std::size_t Integer::hash() const {
  if (!big_) return std::hash<long long>()(small_);
  return std::hash<std::string>()(str());
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

}  // namespace qtower
