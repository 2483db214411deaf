#include "qtower/transfer.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace qtower {

namespace {

using Partners = std::array<std::int8_t, kMaxPoints + 1>;

int root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

Layer blank_layer(int n) {
  Layer l;
  l.n = n;
  l.link.assign(2 * n, -1);
  l.ray.assign(std::max(n, 1), {});
  return l;
}

void join(Layer& l, int a, int b) {
  l.link[a] = b;
  l.link[b] = a;
}

}  // namespace

Composite compose_layer(const Layer& layer, const Pattern& p) {
  int n = layer.n;
  if (p.n() != n) throw std::invalid_argument("compose_layer: size mismatch");
  if (n == 0) return {0, 0, p};
  std::vector<int> parent(2 * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int a, int b) { parent[root(parent, a)] = root(parent, b); };
  for (int e = 0; e < 2 * n; ++e) {
    if (layer.link[e] < 0) throw std::invalid_argument("compose_layer: open endpoint");
    unite(e, layer.link[e]);
  }
  for (int a = 1; a <= n; ++a)
    if (p.partner(a) > a) unite(inner_end(a), inner_end(p.partner(a)));

  std::vector<std::vector<int>> outer_of(2 * n);
  for (int j = 1; j <= n; ++j) outer_of[root(parent, outer_end(n, j))].push_back(j);
  int defect_root = p.is_even() ? -1 : root(parent, inner_end(p.defect()));

  std::vector<int> crossings(2 * n, 0);
  if (p.is_even())
    for (int e : layer.ray[p.gap()]) ++crossings[root(parent, e)];

  Composite out;
  Partners pa{};
  int new_defect = 0;
  std::vector<std::pair<std::pair<int, int>, bool>> arches;
  for (int r = 0; r < 2 * n; ++r) {
    if (root(parent, r) != r) continue;
    const auto& outs = outer_of[r];
    if (outs.empty()) {
      if (r == defect_root) throw std::logic_error("compose_layer: defect strand has no outer end");
      if (p.is_even() && crossings[r] % 2 == 1) {
        ++out.u_loops;
      } else {
        ++out.delta_loops;
      }
    } else if (outs.size() == 1) {
      if (r != defect_root) throw std::logic_error("compose_layer: unpaired outer endpoint");
      new_defect = outs[0];
    } else if (outs.size() == 2) {
      int a = outs[0];
      int b = outs[1];
      pa[a] = static_cast<std::int8_t>(b);
      pa[b] = static_cast<std::int8_t>(a);
      if (p.is_even()) arches.push_back({{a, b}, gap_inside(a, b, p.gap()) != (crossings[r] % 2 == 1)});
    } else {
      throw std::logic_error("compose_layer: strand with more than two outer ends");
    }
  }
  if (!p.is_even()) {
    out.pattern = Pattern::odd(n, pa, new_defect);
    return out;
  }
  for (int g = 0; g < n; ++g) {
    Pattern cand = Pattern::even(n, pa, g);
    bool match = true;
    for (const auto& [ab, flag] : arches) match = match && cand.flagged(ab.first, ab.second) == flag;
    if (match) {
      out.pattern = cand;
      return out;
    }
  }
  throw std::logic_error("compose_layer: flag set is not a face");
}

Layer e_layer(int n, int i) {
  if (n < 2 || i < 0 || i >= n) throw std::out_of_range("e_layer: generator index");
  Layer l = blank_layer(n);
  int a = i == 0 ? n : i;
  int b = i == 0 ? 1 : i + 1;
  for (int j = 1; j <= n; ++j)
    if (j != a && j != b) join(l, inner_end(j), outer_end(n, j));
  join(l, inner_end(a), inner_end(b));
  join(l, outer_end(n, a), outer_end(n, b));
  l.ray[i] = {inner_end(a), outer_end(n, a)};
  return l;
}

Layer rho_layer(int n, int dir) {
  Layer l = blank_layer(n);
  for (int j = 1; j <= n; ++j) {
    int to = dir > 0 ? j % n + 1 : (j + n - 2) % n + 1;
    join(l, inner_end(j), outer_end(n, to));
    int gap = dir > 0 ? j % n : (j - 1) % n;
    l.ray[gap].push_back(inner_end(j));
  }
  return l;
}

Layer row_layer(int n, std::uint32_t ne_mask) {
  Layer l = blank_layer(n);
  // Channel g (1..n) is E_g = W_{g+1}; it lies on gap g mod n. Each channel
  // is met by one strand end from each neighbouring tile.
  // node ids: endpoints 0..2n-1, channel g -> 2n + g - 1
  int nodes = 3 * n;
  std::vector<std::vector<int>> adj(nodes);
  auto edge = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  auto channel = [&](int g) { return 2 * n + ((g - 1 + n) % n); };
  for (int i = 1; i <= n; ++i) {
    int north = inner_end(i);
    int south = outer_end(n, i);
    int west = channel(i - 1 == 0 ? n : i - 1);
    int east = channel(i);
    if (ne_mask & (1u << (i - 1))) {
      edge(north, east);
      edge(west, south);
    } else {
      edge(north, west);
      edge(east, south);
    }
  }
  for (int start = 0; start < 2 * n; ++start) {
    if (l.link[start] >= 0) continue;
    int prev = -1;
    int cur = start;
    while (true) {
      int next = -1;
      for (int nb : adj[cur])
        if (nb != prev) {
          next = nb;
          break;
        }
      if (next < 0) throw std::logic_error("row_layer: dead end");
      prev = cur;
      cur = next;
      if (cur < 2 * n) break;
      int g = cur - 2 * n + 1;
      l.ray[g % n].push_back(start);
    }
    join(l, start, cur);
  }
  return l;
}

Scalar weight_a(const Field& f, const Scalar& y) { return (y - f.one()) / (f.s_pow(2) - f.s_pow(-2) * y); }

Scalar weight_b(const Field& f, const Scalar& y) {
  return (f.s_pow(2) * y - f.s_pow(-2)) / (f.s_pow(2) - f.s_pow(-2) * y);
}

TransferOperator::TransferOperator(const Field& f, int n) : field_(f), n_(n), basis_(&Basis::of(n)) {
  if (n == 0) {
    rows_ = {{TLModule::Entry{0, f.u()}}};
    return;
  }
  std::uint32_t count = 1u << n;
  rows_.resize(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    Layer l = row_layer(n, mask);
    rows_[mask].reserve(basis_->size());
    for (const auto& p : basis_->patterns()) {
      Composite c = compose_layer(l, p);
      Scalar w = f.delta().pow(c.delta_loops) * f.u().pow(c.u_loops);
      rows_[mask].push_back(TLModule::Entry{basis_->index(c.pattern), w});
    }
  }
}

Matrix TransferOperator::with_tile_weights(const std::vector<Scalar>& nw, const std::vector<Scalar>& ne) const {
  int d = dim();
  Matrix m = mat_zero(d, d);
  for (std::uint32_t mask = 0; mask < rows_.size(); ++mask) {
    Scalar w = field_.one();
    for (int i = 0; i < n_; ++i) w *= (mask & (1u << i)) ? ne[i] : nw[i];
    if (w.is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      const auto& e = rows_[mask][j];
      m[e.target][j] += w * e.coeff;
    }
  }
  return m;
}

Matrix TransferOperator::evaluate(const Scalar& x, const std::vector<Scalar>& z) const {
  std::vector<Scalar> nw;
  std::vector<Scalar> ne;
  for (int i = 0; i < n_; ++i) {
    Scalar y = x / z[i];
    nw.push_back(weight_a(field_, y));
    ne.push_back(weight_b(field_, y));
  }
  return with_tile_weights(nw, ne);
}

Matrix TransferOperator::evaluate_last_zero(const Scalar& x, const std::vector<Scalar>& z_head) const {
  if (n_ < 1) throw std::invalid_argument("evaluate_last_zero: n >= 1 required");
  std::vector<Scalar> nw;
  std::vector<Scalar> ne;
  for (int i = 0; i + 1 < n_; ++i) {
    Scalar y = x / z_head[i];
    nw.push_back(weight_a(field_, y));
    ne.push_back(weight_b(field_, y));
  }
  nw.push_back(-field_.s_pow(2));
  ne.push_back(-field_.s_pow(4));
  return with_tile_weights(nw, ne);
}

const std::vector<std::vector<ZPoly>>& TransferOperator::cleared() const {
  if (cleared_ready_) return cleared_;
  int d = dim();
  int nv = n_ + 1;
  cleared_.assign(d, std::vector<ZPoly>(d, ZPoly(nv)));
  Scalar th = field_.s_pow(2);
  Scalar tmh = field_.s_pow(-2);
  for (std::uint32_t mask = 0; mask < rows_.size(); ++mask) {
    ZPoly w = ZPoly::constant(nv, field_.one());
    for (int i = 1; i <= n_; ++i) {
      bool ne = mask & (1u << (i - 1));
      w = w * (ne ? linear2(nv, nv, th, i, -tmh) : linear2(nv, nv, field_.one(), i, -field_.one()));
    }
    for (int j = 0; j < d; ++j) {
      const auto& e = rows_[mask][j];
      cleared_[e.target][j].add_scaled(w, e.coeff);
    }
  }
  cleared_ready_ = true;
  return cleared_;
}

PolyVec TransferOperator::apply_cleared(const PolyVec& g) const {
  const auto& a = cleared();
  int d = dim();
  PolyVec ext;
  for (const auto& p : g) ext.push_back(p.extend(1));
  PolyVec out(d, ZPoly(n_ + 1));
  for (int r = 0; r < d; ++r)
    for (int j = 0; j < d; ++j)
      if (!a[r][j].is_zero() && !ext[j].is_zero()) out[r] += a[r][j] * ext[j];
  return out;
}

PolyVec TransferOperator::apply_cleared(const PolyVec& g, const Scalar& x) const {
  int d = dim();
  Scalar th = field_.s_pow(2);
  Scalar tmh = field_.s_pow(-2);
  std::vector<std::vector<ZPoly>> a(d, std::vector<ZPoly>(d, ZPoly(n_)));
  for (std::uint32_t mask = 0; mask < rows_.size(); ++mask) {
    ZPoly w = ZPoly::constant(n_, field_.one());
    for (int i = 1; i <= n_; ++i) {
      bool ne = mask & (1u << (i - 1));
      ZPoly zi = ZPoly::variable(n_, i);
      ZPoly lin = ne ? ZPoly::constant(n_, th * x) - zi * tmh : ZPoly::constant(n_, x) - zi;
      w = w * lin;
    }
    for (int j = 0; j < d; ++j) {
      const auto& e = rows_[mask][j];
      a[e.target][j].add_scaled(w, e.coeff);
    }
  }
  PolyVec out(d, ZPoly(n_));
  for (int r = 0; r < d; ++r)
    for (int j = 0; j < d; ++j)
      if (!a[r][j].is_zero() && !g[j].is_zero()) out[r] += a[r][j] * g[j];
  return out;
}

ZPoly TransferOperator::clearing_factor() const {
  int nv = n_ + 1;
  ZPoly w = ZPoly::constant(nv, field_.one());
  for (int i = 1; i <= n_; ++i) w = w * linear2(nv, i, field_.s_pow(2), nv, -field_.s_pow(-2));
  return w;
}

std::vector<std::vector<std::complex<double>>> o1_float_matrix(int n, const std::vector<double>& theta) {
  using C = std::complex<double>;
  const double pi = std::acos(-1.0);
  C th = std::polar(1.0, 2 * pi / 3);  // t^{1/2} = zeta^2
  C tmh = std::conj(th);
  const Basis& basis = Basis::of(n);
  int d = basis.size();
  std::vector<std::vector<C>> m(d, std::vector<C>(d, C(0)));
  std::vector<C> a(n);
  std::vector<C> b(n);
  for (int i = 0; i < n; ++i) {
    C y = std::polar(1.0, theta[i]);
    a[i] = (y - 1.0) / (th - tmh * y);
    b[i] = (th * y - tmh) / (th - tmh * y);
  }
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    C w = 1.0;
    for (int i = 0; i < n; ++i) w *= (mask & (1u << i)) ? b[i] : a[i];
    Layer l = row_layer(n, mask);
    for (int j = 0; j < d; ++j) {
      Composite c = compose_layer(l, basis[j]);
      m[basis.index(c.pattern)][j] += w;  // loop weights are 1 here
    }
  }
  return m;
}

StochasticReport stochastic_check(int n, int samples, std::uint64_t seed, double tol) {
  const double pi = std::acos(-1.0);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 2 * pi / 3);
  StochasticReport rep;
  rep.samples = samples;
  rep.min_real_entry = 1e300;
  for (int s = 0; s < samples; ++s) {
    std::vector<double> theta(n);
    for (auto& x : theta) {
      do {
        x = dist(rng);
      } while (x <= 0.0);
    }
    auto m = o1_float_matrix(n, theta);
    int d = static_cast<int>(m.size());
    for (int j = 0; j < d; ++j) {
      std::complex<double> col = 0;
      for (int i = 0; i < d; ++i) {
        col += m[i][j];
        rep.min_real_entry = std::min(rep.min_real_entry, m[i][j].real());
        rep.max_imag_entry = std::max(rep.max_imag_entry, std::abs(m[i][j].imag()));
      }
      rep.max_column_deviation = std::max(rep.max_column_deviation, std::abs(col - 1.0));
    }
  }
  rep.ok = rep.max_column_deviation <= tol && rep.min_real_entry >= -tol && rep.max_imag_entry <= tol;
  return rep;
}

}  // namespace qtower
