#pragma once

#include <string>
#include <vector>

#include "qtower/integer.hpp"
#include "qtower/rational.hpp"

namespace qtower {

struct LaurentTerm {
  int es = 0;  // exponent of s = t^{1/4}
  int ev = 0;  // exponent of v
  Integer c;
};

// Integer Laurent polynomial in s and v. Terms are kept sorted in
// decreasing graded-lex order on (es, ev) with no zero coefficients,
// so the first term is the leading term.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Integer c, int es = 0, int ev = 0);
  static LaurentPoly from_terms(std::vector<LaurentTerm> terms);

  const std::vector<LaurentTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  bool has_v() const;
  const LaurentTerm& lead() const { return terms_.front(); }
  const LaurentTerm& trail() const { return terms_.back(); }
  int min_es() const;
  int min_ev() const;
  int max_es() const;
  int max_ev() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly shifted(int ds, int dv) const;
  LaurentPoly scaled(const Integer& k) const;
  // Integer content (positive gcd of coefficients); zero for the zero polynomial.
  Integer content() const;
  LaurentPoly divided_by_integer(const Integer& k) const;

  // Exact quotient a/b in the Laurent ring; throws std::domain_error otherwise.
  static LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);
  // Greatest common divisor up to units; the result is a polynomial
  // (nonnegative exponents, minimal exponent 0 in each variable) with
  // positive leading coefficient. gcd(0, b) = normalized b.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  Rational evaluate(const Rational& s, const Rational& v) const;
  // Exponent substitution s -> s^{-1}.
  LaurentPoly invert_s() const;

  static int cmp(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return cmp(a, b) != 0; }

  std::string str() const;

 private:
  void canonicalize();
  std::vector<LaurentTerm> terms_;
};

// Graded-lex comparison of exponent pairs: >0 when (a_s,a_v) is larger.
int grlex_cmp(int as, int av, int bs, int bv);

}  // namespace qtower
