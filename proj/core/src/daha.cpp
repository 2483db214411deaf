#include "qtower/daha.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qtower {

namespace {

Field unit_twist(const Field& f) { return f.mode() == Mode::Symbolic ? f.with_unit_twist() : f; }

std::string weight_str(const std::vector<int>& l) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
  os << ")";
  return os.str();
}

}  // namespace

BasicRep::BasicRep(const Field& f, int n, Scalar q, Orientation o)
    : field_(f), n_(n), q_(std::move(q)), orientation_(o) {
  k_ = o == Orientation::Plus ? f.s_pow(2) : f.s_pow(-2);
  k_inv_ = k_.inverse();
}

ZPoly divided_difference(const ZPoly& f, int i) {
  int n = f.nvars();
  if (i < 1 || i >= n) throw std::invalid_argument("divided_difference: index out of range");
  std::vector<ZPoly::Term> out;
  MonoKey ui = mono_unit(i - 1);
  MonoKey uj = mono_unit(i);
  for (const auto& [key, c] : f.terms()) {
    int a = mono_exp(key, i - 1);
    int b = mono_exp(key, i);
    if (a == b) continue;
    int lo = std::min(a, b);
    int gap = std::max(a, b) - lo;
    MonoKey base = key - static_cast<MonoKey>(a) * ui - static_cast<MonoKey>(b) * uj;
    base += static_cast<MonoKey>(lo) * (ui + uj);
    Scalar sign = a > b ? c : -c;
    // (x^gap - y^gap) / (x - y) = sum_m x^{gap-1-m} y^m
    for (int m = 0; m < gap; ++m)
      out.emplace_back(base + static_cast<MonoKey>(gap - 1 - m) * ui + static_cast<MonoKey>(m) * uj, sign);
  }
  return ZPoly::from_terms(n, std::move(out));
}

ZPoly BasicRep::T(int i, const ZPoly& f) const {
  ZPoly r = f * (-k_);
  ZPoly d = divided_difference(f, i);
  if (!d.is_zero()) r += linear2(n_, i, k_, i + 1, -k_inv_) * d;
  return r;
}

ZPoly BasicRep::T_inv(int i, const ZPoly& f) const {
  ZPoly r = T(i, f);
  r.add_scaled(f, k_ - k_inv_);
  return r;
}

ZPoly BasicRep::rho(const ZPoly& f) const { return f.rho_shift(q_.inverse()); }

ZPoly BasicRep::rho_inv(const ZPoly& f) const { return f.rho_shift_inverse(q_); }

ZPoly BasicRep::Ybar(int j, const ZPoly& f) const {
  ZPoly r = f;
  for (int i = j - 1; i >= 1; --i) r = T_inv(i, r);
  r = rho_inv(r);
  for (int i = n_ - 1; i >= j; --i) r = T(i, r);
  return r;
}

ZPoly BasicRep::Y(int j, const ZPoly& f) const {
  ZPoly r = f;
  for (int i = j; i <= n_ - 1; ++i) r = T(i, r);
  r = rho(r);
  for (int i = 1; i <= j - 1; ++i) r = T_inv(i, r);
  return r;
}

ZPoly BasicRep::T_inv_of_inverse(const Perm& w, const ZPoly& f) const {
  std::vector<int> word = reduced_word(w);
  ZPoly r = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = T_inv(*it, r);
  return r;
}

std::vector<MonoKey> monomials_of_degree(int n, int d) {
  std::vector<MonoKey> out;
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      e[var] = left;
      out.push_back(mono_pack(e));
      return;
    }
    for (int x = 0; x <= left; ++x) {
      e[var] = x;
      self(self, var + 1, left - x);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back(0);
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> spectrum_exponents(const std::vector<int>& lambda) {
  int n = static_cast<int>(lambda.size());
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) {
    int same_after = 0;
    int smaller = 0;
    for (int j = 0; j < n; ++j) {
      if (j > i && lambda[j] == lambda[i]) ++same_after;
      if (lambda[i] > lambda[j]) ++smaller;
    }
    d[i] = 2 * same_after + 2 * smaller + 1 - n;
  }
  return d;
}

std::vector<Scalar> spectrum(const Field& f, const std::vector<int>& lambda, const Scalar& q) {
  std::vector<int> d = spectrum_exponents(lambda);
  std::vector<Scalar> s;
  Scalar base = -f.s_pow(-2);
  for (std::size_t i = 0; i < lambda.size(); ++i) s.push_back(base.pow(d[i]) * q.pow(lambda[i]));
  return s;
}

std::vector<int> lambda_n(int n) {
  int top = n % 2 == 0 ? n - 2 : n - 1;
  std::vector<int> l;
  for (int x = top; x >= 0; x -= 2) l.push_back(x);
  for (int x = top - 1 + 2 * (n % 2 == 0); x >= 1; x -= 2) l.push_back(x);
  return l;
}

Perm w0_parabolic(int n) {
  int c = (n + 1) / 2;
  Perm w(n);
  for (int i = 1; i <= c; ++i) w[i - 1] = c + 1 - i;
  for (int i = c + 1; i <= n; ++i) w[i - 1] = n + c + 1 - i;
  return w;
}

std::vector<Scalar> cm_spectral_point(const Field& f, int n) {
  Field g = unit_twist(f);
  std::vector<Scalar> x = perm_act(w0_parabolic(n), gamma_weight(g, n));
  Scalar cinv = QkzParams::c_value(g, n).inverse();
  for (auto& s : x) s *= cinv;
  return x;
}

bool has_neighbourhood(const std::vector<int>& lambda) {
  std::vector<int> d = spectrum_exponents(lambda);  // d = 2 rho(lambda)
  int n = static_cast<int>(lambda.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || d[i] - d[j] != 4) continue;
      int diff = lambda[i] - lambda[j];
      if (diff <= 1 || (diff == 2 && j < i)) return true;
    }
  return false;
}

std::vector<std::vector<int>> orbit(std::vector<int> lambda) {
  std::sort(lambda.begin(), lambda.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(lambda);
  } while (std::next_permutation(lambda.begin(), lambda.end()));
  return out;
}

std::vector<int> permute_weight(const Perm& sigma, const std::vector<int>& lambda) {
  Perm inv = perm_inverse(sigma);
  std::vector<int> r(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) r[i] = lambda[inv[i] - 1];
  return r;
}

namespace {

SparseMatrix joint_system(const BasicRep& rep, int degree, const std::vector<Scalar>& spec,
                          std::vector<MonoKey>& monos) {
  int n = rep.n();
  monos = monomials_of_degree(n, degree);
  std::map<MonoKey, int> index;
  for (std::size_t c = 0; c < monos.size(); ++c) index[monos[c]] = static_cast<int>(c);
  int m = static_cast<int>(monos.size());
  SparseMatrix sys(n * m, m);
  const Field& f = rep.field();
  for (int c = 0; c < m; ++c) {
    ZPoly mono = ZPoly::from_terms(n, {{monos[c], f.one()}});
    for (int j = 1; j <= n; ++j) {
      ZPoly y = rep.Ybar(j, mono);
      y.add_scaled(mono, -spec[j - 1]);
      for (const auto& [key, coeff] : y.terms()) sys.add((j - 1) * m + index.at(key), c, coeff);
    }
  }
  return sys;
}

}  // namespace

int joint_kernel_dim(const BasicRep& rep, int degree, const std::vector<Scalar>& spec) {
  std::vector<MonoKey> monos;
  SparseMatrix sys = joint_system(rep, degree, spec, monos);
  return sys.ncols() - sys.rank();
}

MacdonaldResult macdonald_E(const BasicRep& rep, const std::vector<int>& lambda, bool allow_degenerate) {
  int n = rep.n();
  if (static_cast<int>(lambda.size()) != n) throw std::invalid_argument("macdonald_E: weight length != n");
  MacdonaldResult res;
  res.lambda = lambda;
  res.spec = spectrum(rep.field(), lambda, rep.q());
  int degree = 0;
  for (int x : lambda) {
    if (x < 0) throw std::invalid_argument("macdonald_E: negative weight entry");
    degree += x;
  }
  std::vector<MonoKey> monos;
  SparseMatrix sys = joint_system(rep, degree, res.spec, monos);
  auto kernel = sys.nullspace();
  res.kernel_dim = static_cast<int>(kernel.size());
  res.E = ZPoly(n);
  if (res.kernel_dim != 1) {
    if (allow_degenerate) return res;
    throw std::runtime_error("macdonald_E: joint eigenspace of dimension " + std::to_string(res.kernel_dim) +
                             " for " + weight_str(lambda));
  }
  std::vector<ZPoly::Term> terms;
  for (std::size_t c = 0; c < monos.size(); ++c)
    if (!kernel[0][c].is_zero()) terms.emplace_back(monos[c], kernel[0][c]);
  ZPoly e = ZPoly::from_terms(n, std::move(terms));
  Scalar lead = e.coeff(mono_pack(lambda));
  if (lead.is_zero()) {
    if (allow_degenerate) return res;
    throw std::runtime_error("macdonald_E: vanishing z^lambda coefficient for " + weight_str(lambda));
  }
  res.E = e * lead.inverse();
  return res;
}

MacdonaldResult macdonald_lambda_n(const Field& f, int n) {
  Field g = unit_twist(f);
  BasicRep rep(g, n, g.q(), Orientation::Minus);
  return macdonald_E(rep, lambda_n(n));
}

WheelReport wheel_check(const ZPoly& E, const Field& f, int samples, std::uint64_t seed, int t_sign) {
  int n = E.nvars();
  if (n < 3) throw std::invalid_argument("wheel_check: n >= 3 required");
  std::mt19937_64 rng(seed);
  auto rat = [&](int lo, int hi) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_int_distribution<int> sign(0, 1);
    return Rational(num(rng) * (sign(rng) ? 1 : -1), den(rng));
  };
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> rpick(0, 2);
  WheelReport rep;
  int redraws = 0;
  while (rep.samples < samples) {
    Rational s0 = f.mode() == Mode::Symbolic ? Rational(0) : f.s0();
    while (f.mode() == Mode::Symbolic && (s0.is_zero() || s0 == Rational(1) || s0 == Rational(-1))) s0 = rat(2, 9);
    if (f.mode() == Mode::Cyclotomic) throw std::invalid_argument("wheel_check: cyclotomic mode unsupported");
    int r1 = 0;
    int r2 = 0;
    switch (rpick(rng)) {
      case 1:
        r1 = 1;
        break;
      case 2:
        r2 = 1;
        break;
      default:
        break;
    }
    int i1 = pick(rng);
    int i2 = pick(rng);
    int i3 = pick(rng);
    if (i1 == i2 || i2 == i3 || i1 == i3) continue;
    if ((r1 == 0 && i1 > i2) || (r2 == 0 && i2 > i3)) continue;
    Field g = Field::rational_s(s0);
    ZPoly e;
    try {
      e = f.mode() == Mode::Symbolic ? E.map_coeffs([&](const Scalar& c) { return g.embed(c); }) : E;
    } catch (const std::domain_error&) {
      if (++redraws > 100) throw;
      continue;
    }
    std::vector<Scalar> z;
    for (int i = 0; i < n; ++i) z.push_back(Scalar::rational(rat(1, 12)));
    z[i2] = z[i1] * g.s_pow(4 * t_sign + 6 * r1);
    z[i3] = z[i2] * g.s_pow(4 * t_sign + 6 * r2);
    Scalar val = e.evaluate(z);
    ++rep.samples;
    if (!val.is_zero() && rep.ok) {
      rep.ok = false;
      std::ostringstream os;
      os << "s=" << s0.str() << " wheel (" << i1 + 1 << "," << i2 + 1 << "," << i3 + 1 << ") r=(" << r1 << ","
         << r2 << ") value " << val.str();
      rep.witness = os.str();
    }
  }
  return rep;
}

BRelationReport b_relation_check(const BasicRep& rep, const std::vector<int>& lambda, int i) {
  BRelationReport out;
  if (i < 1 || i >= rep.n() || lambda[i - 1] <= lambda[i])
    throw std::invalid_argument("b_relation_check: need lambda_i > lambda_{i+1}");
  const Field& f = rep.field();
  MacdonaldResult a = macdonald_E(rep, lambda);
  std::vector<int> swapped = lambda;
  std::swap(swapped[i - 1], swapped[i]);
  MacdonaldResult b = macdonald_E(rep, swapped);
  Scalar r = a.spec[i] / a.spec[i - 1];
  Scalar t = f.s_pow(4);
  ZPoly lhs = rep.T(i, a.E) * (r - f.one());
  lhs.add_scaled(a.E, f.s_pow(2) - f.s_pow(-2));
  Scalar factor = -f.s_pow(2) * ((t * r - f.one()) * (t.inverse() * r - f.one()) / (r - f.one()));
  ZPoly rhs = b.E * factor;
  out.ok = lhs == rhs;
  PolyVec l{lhs};
  PolyVec bb{b.E};
  if (auto k = proportional(l, bb)) out.lhs_over_rhs = (*k / factor).str();
  if (!out.ok) out.detail = "B_" + std::to_string(i) + " E" + weight_str(lambda) + " is not the stated multiple";
  return out;
}

PolyVec cm_map(const Field& f, const ZPoly& E, int n) {
  Field g = unit_twist(f);
  BasicRep rep(g, n, g.q(), Orientation::Minus);
  TLModule m(g, n);
  Vec u = m.apply_intertwiner_perm(w_n_perm(n), build_Qn(m));
  ZPoly base = rep.T_inv_of_inverse(perm_inverse(w0_parabolic(n)), E);
  PolyVec out(m.dim(), ZPoly(n));
  for (const Perm& w : min_coset_reps(n)) {
    ZPoly p = rep.T_inv_of_inverse(w, base);
    Vec v = u;
    std::vector<int> word = reduced_word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = m.apply_T(*it, v);
    for (int r = 0; r < m.dim(); ++r)
      if (!v[r].is_zero()) out[r].add_scaled(p, v[r]);
  }
  return out;
}

CmComparison cm_compare(const Field& f, int n) {
  Field g = unit_twist(f);
  CmComparison res;
  MacdonaldResult mac = macdonald_lambda_n(g, n);
  PolyVec cm = cm_map(g, mac.E, n);
  PolyVec sol = solve(QkzParams::standard(g, n));
  int cap = Basis::of(n).index(fully_nested(n));
  if (cm[cap].is_zero()) {
    res.detail = "CM image has zero nested component";
    return res;
  }
  ZPoly k;
  try {
    k = ZPoly::divide_exact(sol[cap], cm[cap]);
  } catch (const std::domain_error&) {
    res.detail = "nested components are not proportional";
    return res;
  }
  if (k.degree() != 0) {
    res.detail = "nested ratio is not constant: " + k.str();
    return res;
  }
  res.kappa = k.terms().front().second;
  for (int j = 0; j < static_cast<int>(sol.size()); ++j)
    if (cm[j] * *res.kappa != sol[j]) {
      res.detail = "component " + Basis::of(n)[j].key() + " differs";
      return res;
    }
  res.ok = true;
  return res;
}

BasicRepReport verify_basic_rep(const QkzParams& p, const PolyVec& g) {
  BasicRepReport res;
  Field f = unit_twist(p.field);
  int n = p.n;
  if (n < 1) return res;
  BasicRep rep(f, n, p.q, Orientation::Minus);
  TLModule m(f, n);
  for (int i = 1; i < n && res.ok; ++i) {
    PolyVec rhs = m.apply_T(i, g, true);
    for (std::size_t j = 0; j < g.size(); ++j)
      if (rep.T(i, g[j]) != rhs[j]) {
        res.ok = false;
        res.failing = "T_" + std::to_string(i);
        break;
      }
  }
  if (!res.ok) return res;
  PolyVec rhs = m.apply_rho(g, -1);
  for (std::size_t j = 0; j < g.size(); ++j)
    if (rep.rho(g[j]) != rhs[j] * p.c) {
      res.ok = false;
      res.failing = "rho";
      break;
    }
  return res;
}

}  // namespace qtower
