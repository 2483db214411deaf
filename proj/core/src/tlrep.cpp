#include "qtower/tlrep.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qtower {

namespace {

using Partners = std::array<std::int8_t, kMaxPoints + 1>;

std::uint32_t flag_signature_of_gap(int n, const Partners& pa, int g) {
  std::uint32_t sig = 0;
  for (int a = 1; a <= n; ++a)
    if (pa[a] > a && gap_inside(a, pa[a], g)) sig |= 1u << a;
  return sig;
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

EImage e_on_pattern(int i, const Pattern& p) {
  int n = p.n();
  if (i < 1 || i >= n) throw std::out_of_range("e_on_pattern: generator index");
  Partners pa = p.partners();
  int a = pa[i];
  int b = pa[i + 1];
  if (a == i + 1) {
    if (p.is_even() && p.gap() == i) return {LoopWeight::U, Pattern::even(n, pa, i - 1)};
    return {LoopWeight::Delta, p};
  }
  // Defect sliding along an arch; crossing gap 0 upwards (n -> 1) costs v,
  // downwards v^{-1}, as for the rotation.
  if (a == 0) {
    pa[i] = static_cast<std::int8_t>(i + 1);
    pa[i + 1] = static_cast<std::int8_t>(i);
    pa[b] = 0;
    return {LoopWeight::One, Pattern::odd(n, pa, b), b < i ? 1 : 0};
  }
  if (b == 0) {
    pa[a] = 0;
    pa[i] = static_cast<std::int8_t>(i + 1);
    pa[i + 1] = static_cast<std::int8_t>(i);
    return {LoopWeight::One, Pattern::odd(n, pa, a), a > i + 1 ? -1 : 0};
  }
  pa[i] = static_cast<std::int8_t>(i + 1);
  pa[i + 1] = static_cast<std::int8_t>(i);
  pa[a] = static_cast<std::int8_t>(b);
  pa[b] = static_cast<std::int8_t>(a);
  if (!p.is_even()) return {LoopWeight::One, Pattern::odd(n, pa, p.defect())};
  // New flag set: untouched arches keep theirs, (a,b) gets the XOR of the
  // two rewired arches, the new little arch is unflagged.
  std::uint32_t want = 0;
  for (int x = 1; x <= n; ++x) {
    int y = pa[x];
    if (y <= x || x == i) continue;
    bool f;
    if (x == std::min(a, b) && y == std::max(a, b)) {
      f = p.flagged(i, a) != p.flagged(i + 1, b);
    } else {
      f = p.flagged(x, y);
    }
    if (f) want |= 1u << x;
  }
  for (int g = 0; g < n; ++g)
    if (flag_signature_of_gap(n, pa, g) == want) return {LoopWeight::One, Pattern::even(n, pa, g)};
  throw std::logic_error("e_on_pattern: flag set is not a face");
}

RhoImage rho_on_pattern(const Pattern& p, int dir) {
  int n = p.n();
  if (n == 0) return {0, p};
  auto move = [&](int x) { return dir > 0 ? x % n + 1 : (x + n - 2) % n + 1; };
  Partners pa{};
  for (int x = 1; x <= n; ++x)
    if (p.partner(x) != 0) pa[move(x)] = static_cast<std::int8_t>(move(p.partner(x)));
  if (p.is_even()) return {0, Pattern::even(n, pa, p.gap() + (dir > 0 ? 1 : -1))};
  int d = p.defect();
  int vpow = 0;
  if (dir > 0 && d == n) vpow = 1;
  if (dir < 0 && d == 1) vpow = -1;
  return {vpow, Pattern::odd(n, pa, move(d))};
}

TLModule::TLModule(const Field& f, int n)
    : field_(f), n_(n), basis_(&Basis::of(n)), t_half_(f.s_pow(2)), t_mhalf_(f.s_pow(-2)) {
  int d = basis_->size();
  auto entry_for = [&](const Pattern& target, const Scalar& c) { return Entry{basis_->index(target), c}; };
  rho_.reserve(d);
  rho_inv_.reserve(d);
  for (const auto& p : basis_->patterns()) {
    RhoImage r = rho_on_pattern(p, 1);
    rho_.push_back(entry_for(r.pattern, f.v_pow(r.vpow)));
    RhoImage ri = rho_on_pattern(p, -1);
    rho_inv_.push_back(entry_for(ri.pattern, f.v_pow(ri.vpow)));
  }
  e_.assign(std::max(n, 1), {});
  for (int i = 1; i < n; ++i) {
    e_[i].reserve(d);
    for (const auto& p : basis_->patterns()) {
      EImage e = e_on_pattern(i, p);
      e_[i].push_back(entry_for(e.pattern, weight_value(e.weight) * f.v_pow(e.vpow)));
    }
  }
  if (n >= 2) {
    e_[0].reserve(d);
    for (int j = 0; j < d; ++j) {
      const Entry& a = rho_inv_[j];
      const Entry& b = e_[n - 1][a.target];
      const Entry& c = rho_[b.target];
      e_[0].push_back(Entry{c.target, a.coeff * b.coeff * c.coeff});
    }
  }
}

int TLModule::check_e(int i) const {
  if (n_ < 2 || i < 0 || i >= n_) throw std::out_of_range("TLModule: generator index");
  return i;
}

Scalar TLModule::weight_value(LoopWeight w) const {
  switch (w) {
    case LoopWeight::One:
      return field_.one();
    case LoopWeight::Delta:
      return field_.delta();
    case LoopWeight::U:
      return field_.u();
  }
  return field_.one();
}

Vec TLModule::unit(int j) const {
  if (j < 0 || j >= dim()) throw std::out_of_range("TLModule: basis index");
  Vec x = zero();
  x[j] = field_.one();
  return x;
}

Vec TLModule::apply_Y(int j, const Vec& x) const {
  Vec y = x;
  for (int i = j; i <= n_ - 1; ++i) y = apply_T(i, y, false);
  y = apply_rho(y, 1);
  for (int i = 1; i <= j - 1; ++i) y = apply_T(i, y, true);
  return y;
}

Vec TLModule::apply_Y_inv(int j, const Vec& x) const {
  Vec y = x;
  for (int i = j - 1; i >= 1; --i) y = apply_T(i, y, false);
  y = apply_rho(y, -1);
  for (int i = n_ - 1; i >= j; --i) y = apply_T(i, y, true);
  return y;
}

Vec TLModule::apply_yhat(int j, const Vec& x) const {
  Vec y = apply_Y(j, x);
  Scalar c = field_.s_pow(-(2 * j - n_ - 1));
  for (auto& v : y) v *= c;
  return y;
}

Vec TLModule::apply_Y_root(int i, const Vec& x) const { return apply_Y(i, apply_Y_inv(i + 1, x)); }

Vec TLModule::apply_intertwiner(int i, const Vec& x) const {
  Vec yr = apply_Y_root(i, x);
  Vec diff = x;
  for (std::size_t j = 0; j < diff.size(); ++j) diff[j] -= yr[j];
  Vec out = apply_T(i, diff, false);
  Scalar c = t_mhalf_ - t_half_;
  for (std::size_t j = 0; j < out.size(); ++j) axpy(out[j], yr[j], c);
  return out;
}

Vec TLModule::apply_intertwiner_perm(const std::vector<int>& w, const Vec& x) const {
  std::vector<int> word = reduced_word(w);
  Vec y = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) y = apply_intertwiner(*it, y);
  return y;
}

Matrix TLModule::matrix_of(const std::function<Vec(const Vec&)>& op) const {
  int d = dim();
  Matrix m(d, Vec(d, field_.zero()));
  for (int j = 0; j < d; ++j) {
    Vec col = op(unit(j));
    for (int i = 0; i < d; ++i) m[i][j] = col[i];
  }
  return m;
}

Scalar TLModule::pair_close_pattern(const Pattern& p) const {
  int n = p.n();
  if (n == 0) return field_.one();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int a, int b) { parent[find(parent, a)] = find(parent, b); };
  for (int a = 1; a <= n; ++a)
    if (p.partner(a) > a) unite(a, p.partner(a));
  for (int i = 1; 2 * i <= n; ++i) unite(2 * i - 1, 2 * i);
  int loops_delta = 0;
  int loops_u = 0;
  if (n % 2 == 0) {
    int g = p.gap();
    int marked = (g % 2 == 1) ? find(parent, g) : -1;
    for (int a = 1; a <= n; ++a) {
      if (find(parent, a) != a) continue;
      if (a == marked) {
        ++loops_u;
      } else {
        ++loops_delta;
      }
    }
  } else {
    int through = find(parent, n);
    for (int a = 1; a <= n; ++a)
      if (find(parent, a) == a && a != through) ++loops_delta;
  }
  return field_.delta().pow(loops_delta) * field_.u().pow(loops_u);
}

Scalar TLModule::pair_close(const Vec& x) const {
  Scalar acc = field_.zero();
  for (int j = 0; j < dim(); ++j)
    if (!x[j].is_zero()) acc += x[j] * pair_close_pattern((*basis_)[j]);
  return acc;
}

Perm perm_identity(int n) {
  Perm w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

Perm perm_inverse(const Perm& w) {
  Perm r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[w[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i] - 1];
  return r;
}

int perm_length(const Perm& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

std::vector<int> reduced_word(const Perm& w) {
  Perm x = w;
  std::vector<int> rev;
  bool found = true;
  while (found) {
    found = false;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      if (x[i] > x[i + 1]) {
        // x = (x s_i) s_i with l(x s_i) = l(x) - 1
        std::swap(x[i], x[i + 1]);
        rev.push_back(static_cast<int>(i) + 1);
        found = true;
        break;
      }
    }
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::vector<Scalar> perm_act(const Perm& w, const std::vector<Scalar>& xi) {
  Perm winv = perm_inverse(w);
  std::vector<Scalar> r(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) r[i] = xi[winv[i] - 1];
  return r;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm w = perm_identity(n);
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<int> parabolic_set(int n) {
  std::vector<int> I;
  int c = (n + 1) / 2;
  for (int i = 1; i < n; ++i)
    if (i != c) I.push_back(i);
  return I;
}

std::vector<Perm> min_coset_reps(int n) {
  int c = (n + 1) / 2;
  std::vector<Perm> out;
  for (const auto& w : all_perms(n)) {
    bool ok = true;
    for (int i = 1; i < n && ok; ++i)
      if (i != c && w[i - 1] > w[i]) ok = false;
    if (ok) out.push_back(w);
  }
  return out;
}

Perm w_n_perm(int n) {
  int k = (n + 1) / 2;
  Perm w(n);
  for (int pos = 1; pos <= n; ++pos) w[pos - 1] = pos % 2 == 1 ? (pos + 1) / 2 : k + pos / 2;
  return w;
}

std::vector<Scalar> xi_hat(const Field& f, int n) {
  int eps = n % 2 == 0 ? 1 : -1;
  Scalar eta = f.v_pow(eps);
  Scalar eta_inv = f.v_pow(-eps);
  std::vector<Scalar> xi;
  for (int i = 1; 2 * i <= n; ++i) {
    xi.push_back(eta_inv);
    xi.push_back(eta);
  }
  if (n % 2 == 1) xi.push_back(f.v_pow(1));
  return xi;
}

std::vector<Scalar> xi_weight(const Field& f, int n) {
  std::vector<Scalar> xi = xi_hat(f, n);
  for (int j = 1; j <= n; ++j) xi[j - 1] *= f.s_pow(2 * j - n - 1);
  return xi;
}

std::vector<Scalar> gamma_weight(const Field& f, int n) { return perm_act(w_n_perm(n), xi_weight(f, n)); }

Scalar e_w_value(const Field& f, const Perm& w, const std::vector<Scalar>& mu) {
  Scalar th = f.s_pow(2);
  Scalar tmh = f.s_pow(-2);
  Scalar acc = f.one();
  int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (w[i] < w[j]) continue;
      Scalar ratio = mu[i] / mu[j];
      acc *= (th - tmh * ratio) * (th - tmh * ratio.inverse());
    }
  return acc;
}

std::vector<Vec> build_DJ(const TLModule& m) {
  const Field& f = m.field();
  int n = m.n();
  int k = n / 2;
  int eps = n % 2 == 0 ? 1 : -1;
  std::vector<Vec> D(std::size_t{1} << k);
  D[0] = m.unit(least_nested(n));
  Scalar shift = f.v_pow(eps) + f.s_pow(-2) * f.v_pow(-eps);
  Scalar pre = f.s_pow(-1);
  for (unsigned J = 1; J < (1u << k); ++J) {
    int top = 31 - __builtin_clz(J);  // largest element, 0-based
    unsigned base = J & ~(1u << top);
    Vec y = m.apply_yhat(2 * (top + 1), D[base]);
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = pre * (y[j] - shift * D[base][j]);
    D[J] = std::move(y);
  }
  return D;
}

Vec build_Qn(const TLModule& m) {
  const Field& f = m.field();
  int n = m.n();
  int eps = n % 2 == 0 ? 1 : -1;
  std::vector<Vec> D = build_DJ(m);
  Vec q = m.zero();
  for (unsigned J = 0; J < D.size(); ++J) {
    int size = __builtin_popcount(J);
    Scalar c = f.s_pow(size) * f.v_pow(-eps * size);
    for (std::size_t j = 0; j < q.size(); ++j) axpy(q[j], D[J][j], c);
  }
  return q;
}

Scalar pairing_formula(const Field& f, int n) {
  int k = n / 2;
  Scalar acc = f.zero();
  for (unsigned J = 0; J < (1u << k); ++J) {
    int m = __builtin_popcount(J);
    Scalar loop = n % 2 == 0 ? f.s_pow(1) * f.v_pow(1) + f.s_pow(-1) * f.v_pow(-1)
                             : f.s_pow(1) * f.v_pow(-1) + f.s_pow(-1) * f.v_pow(1);
    Scalar tw = n % 2 == 0 ? f.v_pow(-m) : f.v_pow(m);
    acc += f.s_pow(m) * tw * loop.pow(m) * f.delta().pow(k - m);
  }
  return acc;
}

bool is_zero_vec(const Vec& x) {
  return std::all_of(x.begin(), x.end(), [](const Scalar& c) { return c.is_zero(); });
}

bool proportional(const Vec& x, const Vec& y, Scalar* ratio) {
  if (x.size() != y.size()) return false;
  std::size_t pivot = 0;
  while (pivot < y.size() && y[pivot].is_zero()) ++pivot;
  if (pivot == y.size()) {
    if (ratio) *ratio = Scalar(0);
    return is_zero_vec(x);
  }
  Scalar r = x[pivot] / y[pivot];
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] != r * y[j]) return false;
  if (ratio) *ratio = r;
  return true;
}

}  // namespace qtower
