#include "qtower/qkz.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qtower/transfer.hpp"

namespace qtower {

namespace {

std::string monomial_str(MonoKey k, int n) {
  std::vector<int> e = mono_unpack(k, n);
  std::ostringstream os;
  os << "z^(";
  for (int i = 0; i < n; ++i) os << (i ? "," : "") << e[i];
  os << ")";
  return os.str();
}

PolyVec swapped(const PolyVec& f, int i) {
  PolyVec g;
  g.reserve(f.size());
  for (const auto& p : f) g.push_back(p.swap(i));
  return g;
}

// First nonzero residual term, if any.
bool first_witness(const PolyVec& r, const Basis& b, int nvars, std::string& comp, std::string& witness) {
  for (std::size_t j = 0; j < r.size(); ++j)
    if (!r[j].is_zero()) {
      const auto& t = r[j].terms().front();
      comp = b[static_cast<int>(j)].key();
      witness = monomial_str(t.first, nvars) + " coeff " + t.second.str();
      return true;
    }
  return false;
}

std::vector<MonoKey> monomials_of_degree(int n, int d) {
  std::vector<MonoKey> out;
  std::vector<int> e(n, 0);
  // Enumerate compositions of d into n parts.
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      e[pos] = left;
      out.push_back(mono_pack(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back(MonoKey{0});
    return out;
  }
  rec(0, d);
  return out;
}

}  // namespace

Scalar QkzParams::c_value(const Field& f, int n) {
  if (n == 0) return f.s_pow(1) + f.s_pow(-1);
  return (-f.s_pow(-3)).pow(n - 1);
}

QkzParams QkzParams::standard(const Field& f, int n) {
  if (n < 0 || n > kMaxPoints) throw std::invalid_argument("QkzParams: n out of range");
  Field g = f.with_unit_twist();
  return QkzParams{g, n, g.q(), c_value(g, n)};
}

Scalar QkzParams::h_scalar(const Field& f, int n) { return f.s_pow(n / 2 - 2 * n); }

ZPoly QkzParams::h_poly(const Field& f, int n) {
  std::vector<int> e(n, 1);
  return ZPoly::monomial(n, e, h_scalar(f, n));
}

QkzSystem::QkzSystem(const Field& f, int points, int nvars, Scalar q, Scalar c, Kind kind, bool inverted)
    : field_(f.with_unit_twist()), points_(points), nvars_(nvars), q_(std::move(q)), c_(std::move(c)), kind_(kind), inverted_(inverted) {
  if (kind == Kind::Standard && points != nvars) throw std::invalid_argument("QkzSystem: standard needs points == nvars");
  if (kind == Kind::Restricted && points != nvars + 1)
    throw std::invalid_argument("QkzSystem: restricted needs points == nvars + 1");
  if (points < 0 || points > kMaxPoints) throw std::invalid_argument("QkzSystem: size out of range");
  module_ = std::make_shared<const TLModule>(field_, points);
}

QkzSystem QkzSystem::standard(const QkzParams& p) { return QkzSystem(p.field, p.n, p.n, p.q, p.c); }

QkzSystem QkzSystem::restricted(const Field& f, int n) {
  return QkzSystem(f, n + 1, n, f.q(), (-f.s_pow(-3)).pow(n + 1), Kind::Restricted);
}

QkzSystem QkzSystem::inverted_standard(const Field& f, int n) {
  Scalar c = n == 0 ? f.s_pow(1) + f.s_pow(-1) : (-f.s_pow(3)).pow(n - 1);
  return QkzSystem(f, n, n, f.q(), c, Kind::Standard, true);
}

Scalar QkzSystem::shift_scalar() const { return inverted_ ? q_ : q_.inverse(); }

PolyVec QkzSystem::r_lhs(int i, const PolyVec& f) const {
  if (i < 1 || i >= nvars_) throw std::invalid_argument("r_lhs: index out of range");
  int sgn = inverted_ ? -1 : 1;
  Scalar th = field_.s_pow(2 * sgn);
  Scalar tmh = field_.s_pow(-2 * sgn);
  PolyVec fs = swapped(f, i);
  PolyVec efs = module_->apply_e(i, fs);
  ZPoly diff = linear2(nvars_, i + 1, field_.one(), i, -field_.one());
  ZPoly sd = linear2(nvars_, i + 1, th, i, -tmh);
  PolyVec out;
  out.reserve(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    ZPoly acc(nvars_);
    if (!efs[j].is_zero()) acc += diff * efs[j];
    if (!fs[j].is_zero()) acc += sd * fs[j];
    out.push_back(std::move(acc));
  }
  return out;
}

PolyVec QkzSystem::r_rhs(int i, const PolyVec& f) const {
  if (i < 1 || i >= nvars_) throw std::invalid_argument("r_rhs: index out of range");
  int sgn = inverted_ ? -1 : 1;
  ZPoly d = linear2(nvars_, i, field_.s_pow(2 * sgn), i + 1, -field_.s_pow(-2 * sgn));
  PolyVec out;
  out.reserve(f.size());
  for (const auto& p : f) out.push_back(p.is_zero() ? ZPoly(nvars_) : d * p);
  return out;
}

PolyVec QkzSystem::r_residual(int i, const PolyVec& f) const {
  PolyVec a = r_lhs(i, f);
  PolyVec b = r_rhs(i, f);
  for (std::size_t j = 0; j < a.size(); ++j) a[j] -= b[j];
  return a;
}

PolyVec QkzSystem::apply_rho_op(const PolyVec& f) const {
  if (points_ == 0) {
    // V_0: the generator X acts by the puncture loop weight.
    PolyVec y = f;
    for (auto& p : y) p *= field_.u();
    return y;
  }
  if (kind_ == Kind::Standard) return module_->apply_rho(f, 1);
  PolyVec y = module_->apply_e(nvars_, f);
  Scalar a = field_.s_pow(-1);
  Scalar b = field_.s_pow(1);
  for (std::size_t j = 0; j < y.size(); ++j) {
    y[j] *= a;
    y[j].add_scaled(f[j], b);
  }
  return module_->apply_rho(y, 1);
}

PolyVec QkzSystem::rho_residual(const PolyVec& f) const {
  Scalar s = shift_scalar();
  PolyVec shifted;
  shifted.reserve(f.size());
  for (const auto& p : f) shifted.push_back(nvars_ == 0 ? p : p.rho_shift(s));
  PolyVec r = apply_rho_op(shifted);
  for (std::size_t j = 0; j < r.size(); ++j) r[j].add_scaled(f[j], -c_);
  return r;
}

std::string VerifyReport::message() const {
  if (ok) return "ok";
  std::ostringstream os;
  os << "equation " << equation;
  if (!component.empty()) os << " component " << component;
  if (!witness.empty()) os << " witness " << witness;
  return os.str();
}

int worker_threads() {
  const char* env = std::getenv("QTOWER_THREADS");
  if (!env) return 1;
  int k = std::atoi(env);
  return k < 1 ? 1 : k;
}

VerifyReport verify(const QkzSystem& sys, const PolyVec& f) {
  VerifyReport rep;
  const Basis& b = sys.module().basis();
  int nv = sys.nvars();
  if (static_cast<int>(f.size()) != sys.dim()) throw std::invalid_argument("verify: dimension mismatch");

  // Homogeneity of equal degree.
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j].is_zero()) continue;
    if (!f[j].is_homogeneous() || (rep.degree >= 0 && f[j].degree() != rep.degree)) {
      rep.homogeneous = false;
      break;
    }
    rep.degree = f[j].degree();
  }

  // Equation 0 is rho, 1..r_count are R_i.
  int count = sys.r_count() + 1;
  auto residual = [&](int e) { return e == 0 ? sys.rho_residual(f) : sys.r_residual(e, f); };
  std::vector<PolyVec> results(count);
  int threads = std::min(worker_threads(), count);
  if (threads <= 1) {
    for (int e = 0; e < count; ++e) results[e] = residual(e);
  } else {
    std::vector<std::future<void>> jobs;
    for (int w = 0; w < threads; ++w)
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (int e = w; e < count; e += threads) results[e] = residual(e);
      }));
    for (auto& j : jobs) j.get();
  }
  for (int e = 1; e <= count; ++e) {
    int idx = e % count;  // R_1, ..., R_{n-1}, then rho
    std::string comp, wit;
    if (first_witness(results[idx], b, nv, comp, wit)) {
      rep.ok = false;
      rep.equation = idx == 0 ? "rho" : "R_" + std::to_string(idx);
      rep.component = comp;
      rep.witness = wit;
      return rep;
    }
  }

  if (sys.kind() == QkzSystem::Kind::Standard && !sys.inverted() && nv >= 2) {
    const Field& fl = sys.field();
    const ZPoly& g = f[b.index(fully_nested(nv))];
    for (int i = 1; i < nv; ++i) {
      ZPoly lhs = g.swap(i) * linear2(nv, i + 1, fl.s_pow(2), i, -fl.s_pow(-2));
      ZPoly rhs = g * linear2(nv, i, fl.s_pow(2), i + 1, -fl.s_pow(-2));
      if (lhs != rhs) {
        rep.ok = false;
        rep.equation = "nested exchange " + std::to_string(i);
        rep.component = fully_nested(nv).key();
        return rep;
      }
    }
  }
  if (!rep.homogeneous) {
    rep.ok = false;
    rep.equation = "homogeneity";
  }
  return rep;
}

PolyVec solve(const QkzParams& p, bool check) { return solve_seeded(p, nested_product(p.field, p.n), check); }

PolyVec solve_seeded(const QkzParams& p, const ZPoly& seed, bool check) {
  Field f = p.field.with_unit_twist();
  int n = p.n;
  if ((f.s_pow(2) + f.one()).is_zero() || (f.s_pow(4) + f.one()).is_zero())
    throw std::invalid_argument("solve: vanishing loop weight");
  QkzSystem sys = QkzSystem::standard(p);
  const TLModule& m = sys.module();
  const Basis& b = m.basis();
  int d = b.size();
  PolyVec g(d, ZPoly(n));
  std::vector<bool> known(d, false);
  Scalar cinv = p.c.inverse();
  Scalar shift = p.q.inverse();

  auto rotate_from = [&](int j) {
    const auto& e = m.rho_entry(j, 1);
    if (known[e.target]) return e.target;
    g[e.target] = (n == 0 ? g[j] : g[j].rho_shift(shift)) * (cinv * e.coeff);
    known[e.target] = true;
    return e.target;
  };

  int cap = b.index(fully_nested(n));
  g[cap] = seed;
  known[cap] = true;
  if (n <= 1) {
    if (check) {
      VerifyReport r = verify(sys, g);
      if (!r.ok) throw std::runtime_error("solve: verification failed: " + r.message());
    }
    return g;
  }

  // Rotate the nested pattern into the stratum.
  int cur = cap;
  for (int k = 0; k < n / 2; ++k) cur = rotate_from(cur);
  if (!in_dyck_stratum(b[cur])) throw std::logic_error("solve: rotation missed the stratum");

  // Dyck collapse by increasing content.
  std::vector<std::pair<int, int>> order;  // (content, index)
  for (int j = 0; j < d; ++j)
    if (in_dyck_stratum(b[j])) order.emplace_back(dyck_content(dyck_path(b[j])), j);
  std::sort(order.begin(), order.end());
  Scalar th = f.s_pow(2);
  Scalar tmh = f.s_pow(-2);
  for (const auto& [content, nidx] : order) {
    if (known[nidx]) continue;
    std::vector<int> h = dyck_path(b[nidx]);
    int mlen = static_cast<int>(h.size());
    int valley = -1;
    for (int i = 1; i < mlen; ++i) {
      int prev = i >= 2 ? h[i - 2] : 0;
      if (h[i - 1] < prev && h[i] > h[i - 1]) {
        valley = i;
        break;
      }
    }
    if (valley < 0) throw std::logic_error("solve: no valley in " + b[nidx].key());
    int i = valley;
    std::vector<int> hl = h;
    hl[i - 1] += 2;
    int lidx = b.index(from_dyck_path(n, hl));
    if (!known[lidx]) throw std::logic_error("solve: collapsed pattern unknown");
    Scalar gamma_n;
    ZPoly rhs = g[lidx] * linear2(n, i, th, i + 1, -tmh);
    rhs = rhs - rhs.swap(i);
    ZPoly diff = linear2(n, i + 1, f.one(), i, -f.one());
    for (int j = 0; j < d; ++j) {
      const auto& e = m.e_entry(i, j);
      if (e.target != lidx) continue;
      if (j == nidx) {
        gamma_n = e.coeff;
        continue;
      }
      if (!known[j]) throw std::logic_error("solve: preimage " + b[j].key() + " unknown");
      rhs -= diff * g[j].swap(i) * e.coeff;
    }
    if (gamma_n.is_zero()) throw std::logic_error("solve: missing preimage weight");
    ZPoly quotient = ZPoly::divide_exact(rhs, diff * gamma_n);
    g[nidx] = quotient.swap(i);
    known[nidx] = true;
  }

  // Rotate outward until every pattern is reached.
  bool grew = true;
  while (grew) {
    grew = false;
    for (int j = 0; j < d; ++j)
      if (known[j] && !known[m.rho_entry(j, 1).target]) {
        rotate_from(j);
        grew = true;
      }
  }
  for (int j = 0; j < d; ++j)
    if (!known[j]) throw std::logic_error("solve: unreached pattern " + b[j].key());

  if (check) {
    VerifyReport r = verify(sys, g);
    if (!r.ok) throw std::runtime_error("solve: verification failed: " + r.message());
  }
  return g;
}

std::vector<PolyVec> nullspace_oracle(const QkzSystem& sys, int degree) {
  int limit = sys.kind() == QkzSystem::Kind::Standard ? 4 : 3;
  if (sys.nvars() < 1 || sys.nvars() > limit) throw std::invalid_argument("nullspace_oracle: n out of range");
  int nv = sys.nvars();
  int dim = sys.dim();
  std::vector<MonoKey> monos = monomials_of_degree(nv, degree);
  int nm = static_cast<int>(monos.size());
  int ncols = dim * nm;
  std::map<std::tuple<int, int, MonoKey>, int> row_id;
  std::vector<std::tuple<int, int, Scalar>> entries;
  for (int col = 0; col < ncols; ++col) {
    PolyVec f(dim, ZPoly(nv));
    f[col / nm] = ZPoly::from_terms(nv, {{monos[col % nm], sys.field().one()}});
    for (int e = 0; e <= sys.r_count(); ++e) {
      PolyVec r = e == 0 ? sys.rho_residual(f) : sys.r_residual(e, f);
      for (int j = 0; j < dim; ++j)
        for (const auto& t : r[j].terms()) {
          auto key = std::make_tuple(e, j, t.first);
          auto it = row_id.find(key);
          int row = it == row_id.end() ? row_id.emplace(key, static_cast<int>(row_id.size())).first->second : it->second;
          entries.emplace_back(row, col, t.second);
        }
    }
  }
  SparseMatrix sm(static_cast<int>(row_id.size()), ncols);
  for (const auto& [r, c, v] : entries) sm.add(r, c, v);
  std::vector<PolyVec> out;
  for (const auto& vec : sm.nullspace()) {
    PolyVec f(dim, ZPoly(nv));
    for (int col = 0; col < ncols; ++col)
      if (!vec[col].is_zero()) f[col / nm] += ZPoly::from_terms(nv, {{monos[col % nm], vec[col]}});
    out.push_back(std::move(f));
  }
  return out;
}

std::optional<Scalar> proportional(const PolyVec& a, const PolyVec& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::optional<Scalar> k;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (b[j].is_zero()) {
      if (!a[j].is_zero()) return std::nullopt;
      continue;
    }
    if (!k) {
      const auto& lead = b[j].terms().front();
      k = a[j].coeff(lead.first) / lead.second;
    }
    if (a[j] != b[j] * *k) return std::nullopt;
  }
  if (!k) return Scalar(0);
  return k;
}

Matrix r_matrix(const TLModule& m, int i, const Scalar& x) {
  const Field& f = m.field();
  Matrix e = m.matrix_of([&](const Vec& v) { return m.apply_e(i, v); });
  return mat_add(mat_scale(e, weight_a(f, x)), mat_scale(mat_identity(m.dim()), weight_b(f, x)));
}

}  // namespace qtower
