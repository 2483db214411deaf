#include "qtower/tower.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qtower {

namespace {

int sgn(Variant v) { return v == Variant::Iota ? -1 : 1; }

std::vector<Letter> generators(int n) {
  std::vector<Letter> g;
  for (int i = 1; i < n; ++i) g.push_back(Letter::e(i));
  if (n >= 1) {
    g.push_back(Letter::rho());
    g.push_back(Letter::rho_inv());
  }
  return g;
}

const TLModule::Entry& letter_entry(const TLModule& m, const Letter& l, int j) {
  switch (l.kind) {
    case Letter::E:
      return m.e_entry(l.i, j);
    case Letter::Rho:
      return m.rho_entry(j, 1);
    case Letter::RhoInv:
      return m.rho_entry(j, -1);
    default:
      throw std::invalid_argument("factorize: unsupported letter");
  }
}

std::string letter_str(const Letter& l) {
  switch (l.kind) {
    case Letter::E:
      return "e" + std::to_string(l.i);
    case Letter::Rho:
      return "rho";
    case Letter::RhoInv:
      return "rho^-1";
    case Letter::T:
      return "T" + std::to_string(l.i);
    case Letter::TInv:
      return "T" + std::to_string(l.i) + "^-1";
  }
  return "?";
}

Vec add(const Vec& a, const Vec& b) {
  Vec c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

Vec scale(const Vec& a, const Scalar& k) {
  Vec c = a;
  for (auto& x : c) x *= k;
  return c;
}

Vec lin(const Vec& a, const Scalar& ka, const Vec& b, const Scalar& kb) { return add(scale(a, ka), scale(b, kb)); }

std::string first_diff(const TLModule& m, const Vec& a, const Vec& b) {
  for (int i = 0; i < m.dim(); ++i)
    if (a[i] != b[i]) return "row " + m.basis()[i].key() + ": " + a[i].str() + " vs " + b[i].str();
  return "";
}

ZPoly coordinate_product(const Field& f, int n) { return ZPoly::monomial(n, std::vector<int>(n, 1), f.one()); }

// Compares lhs with k * base; fills ratio when proportional.
void compare_sides(const PolyVec& lhs, const PolyVec& base, const Scalar& expected, const Basis& b, RecursionStep& st) {
  st.expected = expected.str();
  PolyVec rhs = base;
  for (auto& p : rhs) p *= expected;
  st.literal_ok = lhs == rhs;
  std::optional<Scalar> k = proportional(lhs, base);
  st.proportional = k.has_value();
  if (k) st.ratio = k->str();
  if (!st.literal_ok)
    for (std::size_t j = 0; j < lhs.size(); ++j)
      if (lhs[j] != rhs[j]) {
        st.detail = "component " + b[static_cast<int>(j)].key();
        break;
      }
}

}  // namespace

Factorization factorize(const Field& field, int n, std::optional<std::uint64_t> shuffle_seed) {
  Field f = field.with_unit_twist();
  TLModule m(f, n);
  const Basis& b = m.basis();
  Factorization fac;
  fac.n = n;
  fac.words.assign(b.size(), OpWord{});
  fac.scalars.assign(b.size(), f.zero());
  std::vector<bool> seen(b.size(), false);
  int base = b.index(least_nested(n));
  seen[base] = true;
  fac.scalars[base] = f.one();
  std::deque<int> queue{base};
  std::mt19937_64 rng(shuffle_seed.value_or(0));
  std::vector<Letter> gens = generators(n);
  while (!queue.empty()) {
    int j = queue.front();
    queue.pop_front();
    if (shuffle_seed) std::shuffle(gens.begin(), gens.end(), rng);
    for (const auto& l : gens) {
      const auto& e = letter_entry(m, l, j);
      if (seen[e.target] || e.coeff.is_zero()) continue;
      seen[e.target] = true;
      OpWord w;
      w.letters.push_back(l);
      w.letters.insert(w.letters.end(), fac.words[j].letters.begin(), fac.words[j].letters.end());
      fac.words[e.target] = std::move(w);
      fac.scalars[e.target] = fac.scalars[j] * e.coeff;
      queue.push_back(e.target);
    }
  }
  for (int j = 0; j < b.size(); ++j)
    if (!seen[j]) throw std::logic_error("factorize: unreachable pattern " + b[j].key());
  return fac;
}

std::vector<OpWord> lift_word(const Field& field, const OpWord& w, int n, Variant variant) {
  Field f = field.with_unit_twist();
  int e = sgn(variant);
  std::vector<OpWord> out{OpWord{w.coeff, {}}};
  for (const auto& l : w.letters) {
    std::vector<std::pair<Scalar, std::vector<Letter>>> images;
    switch (l.kind) {
      case Letter::E:
        images.push_back({f.one(), {l}});
        break;
      case Letter::Rho:
        images.push_back({f.s_pow(-e), {Letter::rho(), Letter::e(n)}});
        images.push_back({f.s_pow(e), {Letter::rho()}});
        break;
      case Letter::RhoInv:
        images.push_back({f.s_pow(e), {Letter::e(n), Letter::rho_inv()}});
        images.push_back({f.s_pow(-e), {Letter::rho_inv()}});
        break;
      default:
        throw std::invalid_argument("lift_word: letters must be e_i or rho^{+-1}");
    }
    std::vector<OpWord> next;
    for (const auto& prefix : out)
      for (const auto& [c, ls] : images) {
        OpWord x = prefix;
        x.coeff = x.coeff * c;
        x.letters.insert(x.letters.end(), ls.begin(), ls.end());
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

Vec apply_lifted_letter(const TLModule& big, const Letter& l, const Vec& x, Variant variant) {
  const Field& f = big.field();
  int e = sgn(variant);
  int n = big.n() - 1;
  switch (l.kind) {
    case Letter::E:
      return big.apply_e(l.i, x);
    case Letter::Rho:
      return big.apply_rho(lin(big.apply_e(n, x), f.s_pow(-e), x, f.s_pow(e)), 1);
    case Letter::RhoInv: {
      Vec y = big.apply_rho(x, -1);
      return lin(big.apply_e(n, y), f.s_pow(e), y, f.s_pow(-e));
    }
    default:
      throw std::invalid_argument("apply_lifted: letters must be e_i or rho^{+-1}");
  }
}

Vec apply_lifted(const TLModule& big, const OpWord& w, const Vec& x, Variant variant) {
  Vec y = x;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) y = apply_lifted_letter(big, *it, y, variant);
  if (!w.coeff.is_one()) y = scale(y, w.coeff);
  return y;
}

Vec phi_base_image(const TLModule& big, Variant variant) {
  const Field& f = big.field();
  int n = big.n() - 1;
  std::vector<std::pair<int, int>> arches = least_nested(n).arches();
  Vec x = big.zero();
  if (n % 2 == 0) {
    x[big.basis().index(Pattern::from_arches(n + 1, arches, n + 1))] = f.one();
    return x;
  }
  arches.emplace_back(n, n + 1);
  x[big.basis().index(Pattern::from_arches(n + 1, arches, 0))] += f.s_pow(sgn(variant));
  x[big.basis().index(Pattern::from_arches(n + 1, arches, n))] += f.one();
  return x;
}

Vec PhiMatrix::apply(const Vec& x) const {
  Vec y(m.size(), field.zero());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!m[r][j].is_zero() && !x[j].is_zero()) y[r] += m[r][j] * x[j];
  return y;
}

PolyVec apply_matrix(const Matrix& m, const PolyVec& g, int nvars) {
  PolyVec out(m.size(), ZPoly(nvars));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (!m[r][j].is_zero() && !g[j].is_zero()) out[r].add_scaled(g[j], m[r][j]);
  return out;
}

PolyVec PhiMatrix::apply(const PolyVec& g, int nvars) const { return apply_matrix(m, g, nvars); }

PhiMatrix phi(const Field& field, int n, Variant variant, const Factorization* table) {
  Field f = field.with_unit_twist();
  Factorization own;
  if (!table) {
    own = factorize(f, n);
    table = &own;
  }
  TLModule small(f, n);
  TLModule big(f, n + 1);
  Vec base = phi_base_image(big, variant);
  PhiMatrix p;
  p.n = n;
  p.variant = variant;
  p.field = f;
  p.m = mat_zero(big.dim(), small.dim());
  for (int j = 0; j < small.dim(); ++j) {
    Vec col = scale(apply_lifted(big, table->words[j], base, variant), table->scalars[j].inverse());
    for (int r = 0; r < big.dim(); ++r) p.m[r][j] = col[r];
  }
  return p;
}

CheckReport check_intertwining(const PhiMatrix& p) {
  int n = p.n;
  TLModule small(p.field, n);
  TLModule big(p.field, n + 1);
  CheckReport rep;
  std::vector<Letter> gens = generators(n);
  for (const auto& l : gens)
    for (int j = 0; j < small.dim(); ++j) {
      Vec lhs = p.apply(small.apply_letter(l, small.unit(j)));
      Vec col(big.dim());
      for (int r = 0; r < big.dim(); ++r) col[r] = p.m[r][j];
      Vec rhs = apply_lifted_letter(big, l, col, p.variant);
      if (lhs != rhs) {
        rep.ok = false;
        rep.detail = letter_str(l) + " on " + small.basis()[j].key() + ": " + first_diff(big, lhs, rhs);
        return rep;
      }
    }
  return rep;
}

CheckReport check_nested_coefficient(const PhiMatrix& p) {
  int n = p.n;
  const Basis& small = Basis::of(n);
  const Basis& big = Basis::of(n + 1);
  int row = big.index(fully_nested(n + 1));
  int cap = small.index(fully_nested(n));
  Scalar expected = p.field.s_pow(-sgn(p.variant) * (n / 2));
  CheckReport rep;
  for (int j = 0; j < small.size(); ++j) {
    Scalar want = j == cap ? expected : p.field.zero();
    if (p.m[row][j] != want) {
      rep.ok = false;
      rep.detail = "column " + small[j].key() + ": " + p.m[row][j].str() + " vs " + want.str();
      return rep;
    }
  }
  return rep;
}

CheckReport nu_diagram_check(const Field& field, int n) {
  Field f = field.with_unit_twist();
  TLModule big(f, n + 1);
  CheckReport rep;
  auto fail = [&](const std::string& what, int j, const Vec& a, const Vec& b) {
    rep.ok = false;
    rep.detail = what + " on " + big.basis()[j].key() + ": " + first_diff(big, a, b);
  };
  for (int j = 0; j < big.dim(); ++j) {
    Vec x = big.unit(j);
    if (n == 0) {
      Vec lhs = lin(big.apply_rho(x, 1), f.s_pow(1), big.apply_rho(x, -1), f.s_pow(-1));
      Vec rhs = scale(x, f.u());
      if (lhs != rhs) fail("X", j, lhs, rhs);
      if (!rep.ok) return rep;
      continue;
    }
    for (int i = 1; i < n; ++i) {
      Vec lhs = big.apply_T(i, x);
      Vec rhs = add(big.apply_e(i, x), scale(x, f.s_pow(-2)));
      if (lhs != rhs) fail("T" + std::to_string(i), j, lhs, rhs);
      if (!rep.ok) return rep;
    }
    if (n >= 2) {
      // nu(T_0) = T_n T_0 T_n^{-1}; I_n(psi(T_0)) = I(rho) e_{n-1} I(rho^{-1}) + t^{-1/2}
      Vec lhs = big.apply_T(n, big.apply_T(0, big.apply_T(n, x, true)));
      Vec y = apply_lifted_letter(big, Letter::rho_inv(), x);
      y = apply_lifted_letter(big, Letter::rho(), big.apply_e(n - 1, y));
      Vec rhs = add(y, scale(x, f.s_pow(-2)));
      if (lhs != rhs) fail("T0", j, lhs, rhs);
      if (!rep.ok) return rep;
    }
    {
      Vec lhs = scale(big.apply_rho(big.apply_T(n, x, true), 1), f.s_pow(-1));
      Vec rhs = apply_lifted_letter(big, Letter::rho(), x);
      if (lhs != rhs) fail("rho", j, lhs, rhs);
      if (!rep.ok) return rep;
    }
    {
      Vec lhs = scale(big.apply_T(n, big.apply_rho(x, -1)), f.s_pow(1));
      Vec rhs = apply_lifted_letter(big, Letter::rho_inv(), x);
      if (lhs != rhs) fail("rho^-1", j, lhs, rhs);
      if (!rep.ok) return rep;
    }
  }
  return rep;
}

std::vector<RecursionStep> braid_verify(const Field& field, int n_max) {
  Field f = field.with_unit_twist();
  std::vector<PolyVec> g;
  for (int n = 0; n <= n_max + 1; ++n) g.push_back(solve(QkzParams::standard(f, n)));
  std::vector<RecursionStep> out;
  for (int n = 0; n <= n_max; ++n) {
    RecursionStep st;
    st.n = n;
    PolyVec lhs;
    for (const auto& p : g[n + 1]) lhs.push_back(p.set_last_zero());
    PolyVec base = phi(f, n).apply(g[n], n);
    ZPoly z = coordinate_product(f, n);
    for (auto& p : base) p = p * z;
    compare_sides(lhs, base, QkzParams::h_scalar(f, n), Basis::of(n + 1), st);
    if (n >= 1) {
      VerifyReport r = verify(QkzSystem::restricted(f, n), lhs);
      st.side_condition_ok = r.ok;
      if (!r.ok && st.detail.empty()) st.detail = "restricted system: " + r.message();
    } else {
      st.side_condition_ok = true;
    }
    out.push_back(std::move(st));
  }
  return out;
}

std::vector<RecursionStep> braid_verify_zeta(int n_max) {
  Field f = Field::cyclotomic();
  std::vector<PolyVec> g;
  for (int n = 0; n <= n_max + 1; ++n) g.push_back(solve(QkzParams::standard(f, n)));
  std::vector<RecursionStep> out;
  for (int n = 0; n <= n_max; ++n) {
    RecursionStep st;
    st.n = n;
    PolyVec lhs;
    for (const auto& p : g[n + 1]) lhs.push_back(p.set_last_zero());
    PolyVec base = phi(f, n).apply(g[n], n);
    ZPoly z = coordinate_product(f, n);
    for (auto& p : base) p = p * z;
    // n + 1 = 2k: (-1)^k t^{-1/2}; n = 2k: (-1)^k.
    Scalar expected = (n % 2 == 1) ? f.integer((((n + 1) / 2) % 2) ? -1 : 1) * f.s_pow(-2)
                                   : f.integer(((n / 2) % 2) ? -1 : 1);
    compare_sides(lhs, base, expected, Basis::of(n + 1), st);
    st.side_condition_ok = n == 0 || verify(QkzSystem::restricted(f, n), lhs).ok;
    out.push_back(std::move(st));
  }
  return out;
}

PolyVec dual_transform(const PolyVec& g, int n) {
  if (n == 0) return g;
  PolyVec out;
  for (const auto& p : g) out.push_back(p.invert_and_clear(n - 1));
  return out;
}

std::vector<RecursionStep> dual_verify(const Field& field, int n_max) {
  Field f = field.with_unit_twist();
  std::vector<PolyVec> gt;
  for (int n = 0; n <= n_max + 1; ++n) gt.push_back(dual_transform(solve(QkzParams::standard(f, n)), n));
  std::vector<RecursionStep> out;
  for (int n = 0; n <= n_max; ++n) {
    RecursionStep st;
    st.n = n;
    PolyVec lhs;
    for (const auto& p : gt[n + 1]) lhs.push_back(p.set_last_zero());
    PolyVec base = phi(f, n, Variant::Iota).apply(gt[n], n);
    ZPoly z = coordinate_product(f, n);
    for (auto& p : base) p = p * z;
    compare_sides(lhs, base, f.s_pow(2 * n - n / 2), Basis::of(n + 1), st);
    VerifyReport r = verify(QkzSystem::inverted_standard(f, n + 1), gt[n + 1]);
    st.side_condition_ok = r.ok;
    if (!r.ok && st.detail.empty()) st.detail = "inverted system: " + r.message();
    out.push_back(std::move(st));
  }
  return out;
}

}  // namespace qtower
