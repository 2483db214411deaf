#include "qtower/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qtower {

int grlex_cmp(int as, int av, int bs, int bv) {
  int da = as + av;
  int db = bs + bv;
  if (da != db) return da < db ? -1 : 1;
  if (as != bs) return as < bs ? -1 : 1;
  return 0;
}

namespace {

bool term_greater(const LaurentTerm& a, const LaurentTerm& b) {
  return grlex_cmp(a.es, a.ev, b.es, b.ev) > 0;
}

// ---- dense univariate helpers over Z (index = degree) ----
using UPoly = std::vector<Integer>;

void utrim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  utrim(r);
  return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  utrim(r);
  return r;
}

UPoly ushift(const UPoly& a, int k) {
  if (a.empty()) return {};
  UPoly r(static_cast<std::size_t>(k), Integer(0));
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

UPoly uscale(const UPoly& a, const Integer& k) {
  if (k.is_zero()) return {};
  UPoly r = a;
  for (auto& c : r) c *= k;
  return r;
}

Integer ucontent(const UPoly& a) {
  Integer g(0);
  for (const auto& c : a) {
    if (c.is_zero()) continue;
    g = Integer::gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

UPoly udiv_int(const UPoly& a, const Integer& k) {
  UPoly r = a;
  for (auto& c : r) c = Integer::div_exact(c, k);
  return r;
}

UPoly uprimitive(const UPoly& a) {
  if (a.empty()) return {};
  Integer g = ucontent(a);
  UPoly r = g.is_one() ? a : udiv_int(a, g);
  if (r.back().sign() < 0) {
    for (auto& c : r) c = -c;
  }
  return r;
}

// Pseudo-remainder: lc(b)^k * a mod b for the minimal k that keeps integrality.
UPoly uprem(UPoly a, const UPoly& b) {
  const Integer& lb = b.back();
  while (!a.empty() && udeg(a) >= udeg(b)) {
    Integer la = a.back();
    int shift = udeg(a) - udeg(b);
    a = usub(uscale(a, lb), ushift(uscale(b, la), shift));
  }
  return a;
}

UPoly upositive(UPoly a) {
  if (!a.empty() && a.back().sign() < 0) {
    for (auto& c : a) c = -c;
  }
  return a;
}

UPoly ugcd(UPoly a, UPoly b) {
  if (a.empty()) return upositive(std::move(b));
  if (b.empty()) return upositive(std::move(a));
  Integer c = Integer::gcd(ucontent(a), ucontent(b));
  a = uprimitive(a);
  b = uprimitive(b);
  if (udeg(a) < udeg(b)) std::swap(a, b);
  while (!b.empty()) {
    UPoly r = uprem(a, b);
    a = std::move(b);
    b = uprimitive(r);
  }
  a = uprimitive(a);
  return uscale(a, c);
}

// Exact division a / b over Z[s]; throws if inexact.
UPoly udiv_exact(UPoly a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("LaurentPoly: division by zero");
  if (a.empty()) return {};
  if (udeg(a) < udeg(b)) throw std::domain_error("LaurentPoly: inexact division");
  UPoly q(static_cast<std::size_t>(udeg(a) - udeg(b) + 1), Integer(0));
  while (!a.empty() && udeg(a) >= udeg(b)) {
    int shift = udeg(a) - udeg(b);
    Integer c = Integer::div_exact(a.back(), b.back());
    q[static_cast<std::size_t>(shift)] = c;
    a = usub(a, ushift(uscale(b, c), shift));
  }
  if (!a.empty()) throw std::domain_error("LaurentPoly: inexact division");
  utrim(q);
  return q;
}

// ---- dense bivariate helpers: polynomials in v with coefficients in Z[s] ----
using BPoly = std::vector<UPoly>;

void btrim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

int bdeg(const BPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly bcontent(const BPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = ugcd(g, c);
    if (g.size() == 1 && g[0].is_one()) break;
  }
  return g;
}

BPoly bdiv_u(const BPoly& p, const UPoly& d) {
  BPoly r;
  r.reserve(p.size());
  for (const auto& c : p) r.push_back(c.empty() ? UPoly{} : udiv_exact(c, d));
  return r;
}

BPoly bprimitive(const BPoly& p) {
  if (p.empty()) return {};
  return bdiv_u(p, bcontent(p));
}

BPoly bprem(BPoly a, const BPoly& b) {
  const UPoly& lb = b.back();
  while (!a.empty() && bdeg(a) >= bdeg(b)) {
    UPoly la = a.back();
    int shift = bdeg(a) - bdeg(b);
    BPoly next(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) next[i] = umul(a[i], lb);
    for (std::size_t i = 0; i < b.size(); ++i) {
      auto& slot = next[i + static_cast<std::size_t>(shift)];
      slot = usub(slot, umul(b[i], la));
    }
    btrim(next);
    a = std::move(next);
  }
  return a;
}

BPoly bgcd(BPoly a, BPoly b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  UPoly ca = bcontent(a);
  UPoly cb = bcontent(b);
  UPoly c = ugcd(ca, cb);
  a = bdiv_u(a, ca);
  b = bdiv_u(b, cb);
  if (bdeg(a) < bdeg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (bdeg(b) == 0) {
      a = BPoly{UPoly{Integer(1)}};
      b.clear();
      break;
    }
    BPoly r = bprem(a, b);
    a = std::move(b);
    b = bprimitive(r);
  }
  a = bprimitive(a);
  for (auto& coeff : a) coeff = umul(coeff, c);
  btrim(a);
  return a;
}

BPoly to_dense(const LaurentPoly& p, int ms, int mv) {
  BPoly out;
  for (const auto& t : p.terms()) {
    auto iv = static_cast<std::size_t>(t.ev - mv);
    auto is = static_cast<std::size_t>(t.es - ms);
    if (out.size() <= iv) out.resize(iv + 1);
    if (out[iv].size() <= is) out[iv].resize(is + 1, Integer(0));
    out[iv][is] = t.c;
  }
  return out;
}

LaurentPoly from_dense(const BPoly& p) {
  std::vector<LaurentTerm> terms;
  for (std::size_t iv = 0; iv < p.size(); ++iv) {
    for (std::size_t is = 0; is < p[iv].size(); ++is) {
      if (p[iv][is].is_zero()) continue;
      terms.push_back({static_cast<int>(is), static_cast<int>(iv), p[iv][is]});
    }
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

LaurentPoly::LaurentPoly(Integer c, int es, int ev) {
  if (!c.is_zero()) terms_.push_back({es, ev, std::move(c)});
}

LaurentPoly LaurentPoly::from_terms(std::vector<LaurentTerm> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void LaurentPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::vector<LaurentTerm> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().es == t.es && merged.back().ev == t.ev) {
      merged.back().c += t.c;
    } else {
      if (!merged.empty() && merged.back().c.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().c.is_zero()) merged.pop_back();
  terms_ = std::move(merged);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].es == 0 && terms_[0].ev == 0 && terms_[0].c.is_one();
}

bool LaurentPoly::has_v() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const LaurentTerm& t) { return t.ev != 0; });
}

int LaurentPoly::min_es() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& t : terms_) m = std::min(m, t.es);
  return terms_.empty() ? 0 : m;
}
int LaurentPoly::min_ev() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& t : terms_) m = std::min(m, t.ev);
  return terms_.empty() ? 0 : m;
}
int LaurentPoly::max_es() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& t : terms_) m = std::max(m, t.es);
  return terms_.empty() ? 0 : m;
}
int LaurentPoly::max_ev() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& t : terms_) m = std::max(m, t.ev);
  return terms_.empty() ? 0 : m;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<LaurentTerm> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    if (i == terms_.size()) {
      out.push_back(o.terms_[j++]);
      continue;
    }
    int c = grlex_cmp(terms_[i].es, terms_[i].ev, o.terms_[j].es, o.terms_[j].ev);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Integer sum = terms_[i].c + o.terms_[j].c;
      if (!sum.is_zero()) out.push_back({terms_[i].es, terms_[i].ev, std::move(sum)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1) {
    const auto& t = a.terms_[0];
    LaurentPoly r = b.shifted(t.es, t.ev);
    return t.c.is_one() ? r : r.scaled(t.c);
  }
  if (b.terms_.size() == 1) return b * a;
  std::vector<LaurentTerm> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) out.push_back({x.es + y.es, x.ev + y.ev, x.c * y.c});
  }
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly LaurentPoly::shifted(int ds, int dv) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) {
    t.es += ds;
    t.ev += dv;
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const Integer& k) const {
  if (k.is_zero()) return {};
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.c *= k;
  return r;
}

Integer LaurentPoly::content() const {
  Integer g(0);
  for (const auto& t : terms_) {
    g = Integer::gcd(g, t.c);
    if (g.is_one()) break;
  }
  return g;
}

LaurentPoly LaurentPoly::divided_by_integer(const Integer& k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.c = Integer::div_exact(t.c, k);
  return r;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  if (a.is_zero()) return {};
  if (b.is_monomial()) {
    const auto& t = b.terms_[0];
    LaurentPoly r = a.shifted(-t.es, -t.ev);
    return t.c.is_one() ? r : r.divided_by_integer(t.c);
  }
  // The quotient's trailing term is trail(a)/trail(b); anything below it
  // means the division is not exact.
  const int low_s = a.trail().es - b.trail().es;
  const int low_v = a.trail().ev - b.trail().ev;
  std::vector<LaurentTerm> q;
  LaurentPoly r = a;
  const auto& lb = b.lead();
  while (!r.is_zero()) {
    const auto& lr = r.lead();
    int qs = lr.es - lb.es;
    int qv = lr.ev - lb.ev;
    if (grlex_cmp(qs, qv, low_s, low_v) < 0) throw std::domain_error("LaurentPoly: inexact division");
    Integer qc = Integer::div_exact(lr.c, lb.c);
    LaurentTerm t{qs, qv, qc};
    q.push_back(t);
    r -= b.shifted(qs, qv).scaled(qc);
  }
  return from_terms(std::move(q));
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  BPoly da = a.is_zero() ? BPoly{} : to_dense(a, a.min_es(), a.min_ev());
  BPoly db = b.is_zero() ? BPoly{} : to_dense(b, b.min_es(), b.min_ev());
  BPoly g;
  if (da.empty()) {
    g = db;
  } else if (db.empty()) {
    g = da;
  } else {
    g = bgcd(std::move(da), std::move(db));
  }
  LaurentPoly r = from_dense(g);
  r = r.shifted(-r.min_es(), -r.min_ev());
  if (!r.is_zero() && r.lead().c.sign() < 0) r = -r;
  return r;
}

Rational LaurentPoly::evaluate(const Rational& s, const Rational& v) const {
  Rational acc(0);
  for (const auto& t : terms_) {
    acc += Rational(t.c) * Rational::pow(s, t.es) * Rational::pow(v, t.ev);
  }
  return acc;
}

LaurentPoly LaurentPoly::invert_s() const {
  std::vector<LaurentTerm> out = terms_;
  for (auto& t : out) t.es = -t.es;
  return from_terms(std::move(out));
}

int LaurentPoly::cmp(const LaurentPoly& a, const LaurentPoly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    int c = grlex_cmp(x.es, x.ev, y.es, y.ev);
    if (c != 0) return c;
    c = Integer::cmp(x.c, y.c);
    if (c != 0) return c;
  }
  if (a.terms_.size() == b.terms_.size()) return 0;
  return a.terms_.size() < b.terms_.size() ? -1 : 1;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Integer c = t.c;
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = t.es == 0 && t.ev == 0;
    if (!c.is_one() || unit) os << c;
    if (t.es != 0) {
      if (!c.is_one()) os << "*";
      os << "s";
      if (t.es != 1) os << "^" << t.es;
    }
    if (t.ev != 0) {
      if (!c.is_one() || t.es != 0) os << "*";
      os << "v";
      if (t.ev != 1) os << "^" << t.ev;
    }
  }
  return os.str();
}

}  // namespace qtower
