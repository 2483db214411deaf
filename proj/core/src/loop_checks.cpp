#include "qtower/loop_checks.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "qtower/qkz.hpp"

namespace qtower {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Rational rational(int lo = 2, int hi = 11) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 6);
    std::uniform_int_distribution<int> sign(0, 1);
    return Rational(num(rng_) * (sign(rng_) ? 1 : -1), den(rng_));
  }
  Field field() {
    std::uniform_int_distribution<int> num(2, 9);
    std::uniform_int_distribution<int> den(1, 5);
    int p = num(rng_);
    int q = den(rng_);
    if (p == q) ++p;
    return Field::rational_s(Rational(p, q));
  }
  std::vector<Scalar> points(int k) {
    std::vector<Scalar> z;
    for (int i = 0; i < k; ++i) z.push_back(Scalar::rational(rational()));
    return z;
  }

 private:
  std::mt19937_64 rng_;
};

// Runs one sampled check, redrawing when a weight has a pole at the point.
template <class F>
void run_samples(SampledReport& rep, int samples, F&& one) {
  constexpr int kMaxRedraws = 100;
  int redraws = 0;
  while (rep.samples < samples) {
    try {
      std::string err = one();
      ++rep.samples;
      if (!err.empty() && rep.ok) {
        rep.ok = false;
        rep.detail = "sample " + std::to_string(rep.samples - 1) + ": " + err;
      }
    } catch (const std::domain_error&) {
      if (++redraws > kMaxRedraws) throw;
    }
  }
}

std::string matrix_diff(const Matrix& a, const Matrix& b, const Basis& rows, const Basis& cols) {
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a[r].size(); ++c)
      if (a[r][c] != b[r][c]) {
        std::ostringstream os;
        os << "entry (" << rows[static_cast<int>(r)].key() << ", " << cols[static_cast<int>(c)].key()
           << "): " << a[r][c].str() << " vs " << b[r][c].str();
        return os.str();
      }
  return "";
}

Matrix r_weight_matrix(const TLModule& m, int i, const Scalar& y) {
  const Field& f = m.field();
  Matrix e = m.matrix_of([&](const Vec& x) { return m.apply_e(i, x); });
  return mat_add(mat_scale(e, weight_a(f, y)), mat_scale(mat_identity(m.dim()), weight_b(f, y)));
}

}  // namespace

SampledReport tmat_conjugated_check(int n, int samples, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tmat_conjugated_check: n >= 1 required");
  Sampler rng(seed);
  SampledReport rep;
  run_samples(rep, samples, [&]() -> std::string {
    Field f = rng.field();
    std::vector<Scalar> z = rng.points(n - 1);
    Scalar x = Scalar::rational(rng.rational());
    TransferOperator big(f, n);
    TransferOperator small(f, n - 1);
    Matrix p = phi(f, n - 1).m;
    Matrix lhs = mat_mul(big.evaluate_last_zero(x, z), p);
    Matrix rhs = mat_scale(mat_mul(p, small.evaluate(x, z)), -f.s_pow(3));
    return matrix_diff(lhs, rhs, Basis::of(n), Basis::of(n - 1));
  });
  return rep;
}

SampledReport transfer_commutation_check(int n, int samples, std::uint64_t seed) {
  Sampler rng(seed);
  SampledReport rep;
  run_samples(rep, samples, [&]() -> std::string {
    Field f = rng.field();
    TransferOperator t(f, n);
    std::vector<Scalar> z = rng.points(n);
    Matrix a = t.evaluate(Scalar::rational(rng.rational()), z);
    Matrix b = t.evaluate(Scalar::rational(rng.rational()), z);
    const Basis& basis = Basis::of(n);
    return matrix_diff(mat_mul(a, b), mat_mul(b, a), basis, basis);
  });
  return rep;
}

SampledReport transfer_rtt_check(int n, int samples, std::uint64_t seed) {
  Sampler rng(seed);
  SampledReport rep;
  run_samples(rep, samples, [&]() -> std::string {
    Field f = rng.field();
    TransferOperator t(f, n);
    TLModule m(f, n);
    const Basis& basis = m.basis();
    std::vector<Scalar> z = rng.points(n);
    Scalar x = Scalar::rational(rng.rational());
    Matrix tz = t.evaluate(x, z);
    for (int i = 1; i < n; ++i) {
      std::vector<Scalar> zs = z;
      std::swap(zs[i - 1], zs[i]);
      Matrix r = r_weight_matrix(m, i, z[i] / z[i - 1]);
      std::string d = matrix_diff(mat_mul(r, t.evaluate(x, zs)), mat_mul(tz, r), basis, basis);
      if (!d.empty()) return "R_" + std::to_string(i) + " " + d;
    }
    if (n >= 1) {
      std::vector<Scalar> zr(z.begin() + 1, z.end());
      zr.push_back(z[0]);
      Matrix rho = m.matrix_of([&](const Vec& v) { return m.apply_rho(v, 1); });
      std::string d = matrix_diff(mat_mul(rho, t.evaluate(x, zr)), mat_mul(tz, rho), basis, basis);
      if (!d.empty()) return "rho " + d;
    }
    return "";
  });
  return rep;
}

O1Report o1_groundstate_check(int n, bool symbolic_x, int samples, std::uint64_t seed) {
  Field f = Field::cyclotomic();
  O1Report rep;
  rep.n = n;
  rep.symbolic_x = symbolic_x;
  PolyVec g = solve(QkzParams::standard(f, n));
  TransferOperator t(f, n);
  const Basis& basis = Basis::of(n);
  auto compare = [&](const PolyVec& lhs, const PolyVec& rhs, const std::string& where) {
    for (int j = 0; j < basis.size(); ++j)
      if (lhs[j] != rhs[j]) {
        rep.ok = false;
        rep.detail = where + "component " + basis[j].key();
        return false;
      }
    return true;
  };
  if (symbolic_x) {
    PolyVec lhs = t.apply_cleared(g);
    ZPoly k = t.clearing_factor();
    PolyVec rhs;
    for (const auto& p : g) rhs.push_back(k * p.extend(1));
    compare(lhs, rhs, "");
    return rep;
  }
  Sampler rng(seed);
  for (int sample = 0; sample < samples && rep.ok; ++sample) {
    Scalar x = Scalar::cyclotomic(rng.rational(), Rational(0));
    ZPoly k = ZPoly::constant(n, f.one());
    for (int i = 1; i <= n; ++i) k = k * (ZPoly::variable(n, i) * f.s_pow(2) - ZPoly::constant(n, f.s_pow(-2) * x));
    PolyVec lhs = t.apply_cleared(g, x);
    PolyVec rhs;
    for (const auto& p : g) rhs.push_back(k * p);
    ++rep.samples;
    compare(lhs, rhs, "x = " + x.str() + ": ");
  }
  return rep;
}

}  // namespace qtower
