#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace qtower {

// Arbitrary precision integer with an inline 64-bit fast path. Values that
// fit in int64_t never touch the heap; larger ones live in an mpz_t.
class Integer {
 public:
  Integer() = default;
  Integer(long long v) : small_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(int v) : small_(v) {}        // NOLINT(google-explicit-constructor)
  explicit Integer(const std::string& decimal);

  Integer(const Integer& o);
  Integer(Integer&& o) noexcept : small_(o.small_), big_(o.big_) { o.big_ = nullptr; }
  Integer& operator=(const Integer& o);
  Integer& operator=(Integer&& o) noexcept;
  ~Integer();

  bool is_small() const { return big_ == nullptr; }
  long long small() const { return small_; }
  bool is_zero() const { return big_ == nullptr && small_ == 0; }
  bool is_one() const { return big_ == nullptr && small_ == 1; }
  int sign() const;
  bool fits_int64() const { return big_ == nullptr; }

  Integer operator-() const;
  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  // Exact quotient; throws std::domain_error if b does not divide a.
  static Integer div_exact(const Integer& a, const Integer& b);
  // Truncated division and remainder.
  static void div_rem(const Integer& a, const Integer& b, Integer& q, Integer& r);
  static Integer gcd(const Integer& a, const Integer& b);
  static Integer pow(const Integer& a, unsigned e);
  Integer abs() const { return sign() < 0 ? -*this : *this; }

  static int cmp(const Integer& a, const Integer& b);
  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Integer& a, const Integer& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Integer& a, const Integer& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Integer& a, const Integer& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const Integer& a, const Integer& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const Integer& a, const Integer& b) { return cmp(a, b) >= 0; }

  std::string str() const;
  double to_double() const;
  std::size_t hash() const;

 private:
  void to_mpz(mpz_t out) const;  // out must be initialized
  void assign_mpz(const mpz_t v);
  void release();

  long long small_ = 0;
  mpz_t* big_ = nullptr;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);

}  // namespace qtower
