#include "qtower/zpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qtower {

MonoKey mono_pack(const std::vector<int>& exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("ZPoly: too many variables");
  MonoKey k = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > kMaxExponent) throw std::out_of_range("ZPoly: exponent out of range");
    k |= static_cast<MonoKey>(exps[i]) << (8 * (7 - i));
  }
  return k;
}

std::vector<int> mono_unpack(MonoKey k, int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = mono_exp(k, i);
  return e;
}

int mono_degree(MonoKey k) {
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) d += mono_exp(k, i);
  return d;
}

ZPoly ZPoly::constant(int n, const Scalar& c) {
  ZPoly p(n);
  if (!c.is_zero()) p.terms_.emplace_back(0, c);
  return p;
}

ZPoly ZPoly::variable(int n, int var) {
  if (var < 1 || var > n) throw std::out_of_range("ZPoly: variable index");
  ZPoly p(n);
  p.terms_.emplace_back(mono_unit(var - 1), Scalar(1));
  return p;
}

ZPoly ZPoly::monomial(int n, const std::vector<int>& exps, const Scalar& c) {
  ZPoly p(n);
  if (!c.is_zero()) p.terms_.emplace_back(mono_pack(exps), c);
  return p;
}

ZPoly ZPoly::from_terms(int n, std::vector<Term> terms) {
  ZPoly p(n);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void ZPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

Scalar ZPoly::coeff(MonoKey k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, MonoKey key) { return t.first < key; });
  if (it != terms_.end() && it->first == k) return it->second;
  return Scalar(0);
}

int ZPoly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, mono_degree(t.first));
  return d;
}

bool ZPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = mono_degree(terms_.front().first);
  for (const auto& t : terms_)
    if (mono_degree(t.first) != d) return false;
  return true;
}

int ZPoly::max_var_degree() const {
  int d = 0;
  for (const auto& t : terms_)
    for (int i = 0; i < n_; ++i) d = std::max(d, mono_exp(t.first, i));
  return d;
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  add_scaled(o, Scalar(1));
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  add_scaled(o, Scalar(-1));
  return *this;
}

void ZPoly::add_scaled(const ZPoly& o, const Scalar& c) {
  if (o.terms_.empty() || c.is_zero()) return;
  if (n_ != o.n_ && !terms_.empty()) throw std::invalid_argument("ZPoly: variable count mismatch");
  n_ = o.n_;
  bool unit = c.is_one();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, unit ? b->second : b->second * c);
      ++b;
    } else {
      Scalar s = std::move(a->second);
      if (unit) {
        s += b->second;
      } else {
        s += b->second * c;
      }
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("ZPoly: variable count mismatch");
  ZPoly r(a.n_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.degree() + b.degree() > kMaxExponent) throw std::out_of_range("ZPoly: degree overflow");
  if (b.terms_.size() == 1) {
    r.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) r.terms_.emplace_back(t.first + b.terms_[0].first, t.second * b.terms_[0].second);
    r.normalize();
    return r;
  }
  std::map<MonoKey, Scalar> acc;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      auto [it, inserted] = acc.try_emplace(x.first + y.first, x.second * y.second);
      if (!inserted) it->second += x.second * y.second;
    }
  r.terms_.reserve(acc.size());
  for (auto& kv : acc)
    if (!kv.second.is_zero()) r.terms_.emplace_back(kv.first, std::move(kv.second));
  return r;
}

ZPoly& ZPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.second *= c;
  return *this;
}

ZPoly ZPoly::swap(int i) const {
  if (i < 1 || i >= n_) throw std::out_of_range("ZPoly: swap index");
  int a = i - 1;
  ZPoly r(n_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    MonoKey k = t.first;
    MonoKey ea = (k >> (8 * (7 - a))) & 0xFFu;
    MonoKey eb = (k >> (8 * (6 - a))) & 0xFFu;
    k &= ~((MonoKey{0xFFFF}) << (8 * (6 - a)));
    k |= (eb << (8 * (7 - a))) | (ea << (8 * (6 - a)));
    r.terms_.emplace_back(k, t.second);
  }
  r.normalize();
  return r;
}

ZPoly ZPoly::rho_shift(const Scalar& qinv) const {
  // z^e -> z_2^{e_1} ... z_n^{e_{n-1}} (qinv z_1)^{e_n}
  ZPoly r(n_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> e = mono_unpack(t.first, n_);
    std::vector<int> f(n_);
    f[0] = e[n_ - 1];
    for (int i = 1; i < n_; ++i) f[i] = e[i - 1];
    r.terms_.emplace_back(mono_pack(f), e[n_ - 1] == 0 ? t.second : t.second * qinv.pow(e[n_ - 1]));
  }
  r.normalize();
  return r;
}

ZPoly ZPoly::rho_shift_inverse(const Scalar& q) const {
  // z^e -> (q z_n)^{e_1} z_1^{e_2} ... z_{n-1}^{e_n}
  ZPoly r(n_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> e = mono_unpack(t.first, n_);
    std::vector<int> f(n_);
    f[n_ - 1] = e[0];
    for (int i = 0; i + 1 < n_; ++i) f[i] = e[i + 1];
    r.terms_.emplace_back(mono_pack(f), e[0] == 0 ? t.second : t.second * q.pow(e[0]));
  }
  r.normalize();
  return r;
}

ZPoly ZPoly::set_last_zero() const {
  if (n_ < 1) throw std::invalid_argument("ZPoly: no variable to drop");
  ZPoly r(n_ - 1);
  for (const auto& t : terms_)
    if (mono_exp(t.first, n_ - 1) == 0) r.terms_.push_back(t);
  return r;
}

ZPoly ZPoly::invert_and_clear(int m) const {
  ZPoly r(n_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> e = mono_unpack(t.first, n_);
    for (auto& x : e) {
      if (x > m) throw std::domain_error("ZPoly: exponent exceeds the clearing bound");
      x = m - x;
    }
    r.terms_.emplace_back(mono_pack(e), t.second);
  }
  r.normalize();
  return r;
}

ZPoly ZPoly::extend(int extra) const {
  if (n_ + extra > kMaxVars) throw std::invalid_argument("ZPoly: too many variables");
  ZPoly r = *this;
  r.n_ = n_ + extra;
  return r;
}

ZPoly ZPoly::shifted(MonoKey k) const {
  ZPoly r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

ZPoly ZPoly::divide_exact(const ZPoly& p, const ZPoly& d) {
  if (d.is_zero()) throw std::domain_error("ZPoly: division by zero");
  if (p.n_ != d.n_ && !p.is_zero()) throw std::invalid_argument("ZPoly: variable count mismatch");
  ZPoly quotient(d.n_);
  ZPoly rem = p;
  rem.n_ = d.n_;
  const Term& lead = d.terms_.back();
  Scalar lead_inv = lead.second.inverse();
  std::vector<int> le = mono_unpack(lead.first, d.n_);
  std::vector<Term> qterms;
  while (!rem.is_zero()) {
    const Term& r = rem.terms_.back();
    std::vector<int> re = mono_unpack(r.first, d.n_);
    for (int i = 0; i < d.n_; ++i)
      if (re[i] < le[i]) throw std::domain_error("ZPoly: inexact division");
    MonoKey qk = r.first - lead.first;
    Scalar qc = r.second * lead_inv;
    qterms.emplace_back(qk, qc);
    ZPoly step(d.n_);
    step.terms_.reserve(d.terms_.size());
    for (const auto& t : d.terms_) step.terms_.emplace_back(t.first + qk, t.second * qc);
    rem -= step;
  }
  quotient.terms_ = std::move(qterms);
  quotient.normalize();
  return quotient;
}

Scalar ZPoly::evaluate(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != n_) throw std::invalid_argument("ZPoly: evaluation point size");
  std::vector<std::vector<Scalar>> powers(n_);
  int maxd = max_var_degree();
  for (int i = 0; i < n_; ++i) {
    powers[i].reserve(maxd + 1);
    powers[i].push_back(Scalar(1));
    for (int k = 1; k <= maxd; ++k) powers[i].push_back(powers[i].back() * point[i]);
  }
  Scalar acc(0);
  for (const auto& t : terms_) {
    Scalar m = t.second;
    for (int i = 0; i < n_; ++i) {
      int e = mono_exp(t.first, i);
      if (e) m *= powers[i][e];
    }
    acc += m;
  }
  return acc;
}

ZPoly ZPoly::map_coeffs(const std::function<Scalar(const Scalar&)>& f) const {
  ZPoly r(n_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(t.first, f(t.second));
  r.normalize();
  return r;
}

bool operator==(const ZPoly& a, const ZPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) return false;
  return true;
}

std::string ZPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    for (int i = 0; i < n_; ++i) {
      int e = mono_exp(it->first, i);
      if (e == 1) os << "*z" << (i + 1);
      if (e > 1) os << "*z" << (i + 1) << "^" << e;
    }
  }
  return os.str();
}

ZPoly linear2(int n, int i, const Scalar& a, int j, const Scalar& b) {
  ZPoly r = ZPoly::variable(n, i) * a;
  r.add_scaled(ZPoly::variable(n, j), b);
  return r;
}

ZPoly nested_product(const Field& f, int n) {
  ZPoly p = ZPoly::constant(n, f.one());
  Scalar th = f.s_pow(2);
  Scalar tmh = -f.s_pow(-2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) p = p * linear2(n, j, th, i, tmh);
  return p;
}

}  // namespace qtower
