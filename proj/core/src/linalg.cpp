#include "qtower/linalg.hpp"

#include <stdexcept>

namespace qtower {

void Echelon::reduce(SparseRow& row) const {
  auto it = row.begin();
  while (it != row.end()) {
    auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    int col = it->first;
    Scalar factor = it->second;
    for (const auto& [c, v] : p->second) {
      auto [slot, inserted] = row.try_emplace(c, -(v * factor));
      if (!inserted) {
        slot->second -= v * factor;
        if (slot->second.is_zero()) row.erase(slot);
      }
    }
    it = row.upper_bound(col);
  }
}

bool Echelon::add_row(SparseRow row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->first < 0 || it->first >= ncols_) throw std::out_of_range("Echelon: column index");
    if (it->second.is_zero()) {
      it = row.erase(it);
    } else {
      ++it;
    }
  }
  reduce(row);
  if (row.empty()) return false;
  Scalar inv = row.begin()->second.inverse();
  for (auto& kv : row) kv.second *= inv;
  pivots_.emplace(row.begin()->first, std::move(row));
  return true;
}

std::vector<std::vector<Scalar>> Echelon::nullspace() const {
  // Back substitution to reduced form, processing pivots from the right.
  std::map<int, SparseRow> reduced;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseRow row = it->second;
    auto pos = row.upper_bound(it->first);
    while (pos != row.end()) {
      auto r = reduced.find(pos->first);
      if (r == reduced.end()) {
        ++pos;
        continue;
      }
      int col = pos->first;
      Scalar factor = pos->second;
      for (const auto& [c, v] : r->second) {
        auto [slot, inserted] = row.try_emplace(c, -(v * factor));
        if (!inserted) {
          slot->second -= v * factor;
          if (slot->second.is_zero()) row.erase(slot);
        }
      }
      pos = row.upper_bound(col);
    }
    reduced.emplace(it->first, std::move(row));
  }
  std::vector<std::vector<Scalar>> basis;
  for (int f = 0; f < ncols_; ++f) {
    if (reduced.count(f)) continue;
    std::vector<Scalar> x(ncols_, Scalar(0));
    x[f] = Scalar(1);
    for (const auto& [p, row] : reduced) {
      auto e = row.find(f);
      if (e != row.end()) x[p] = -e->second;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

void SparseMatrix::add(int row, int col, const Scalar& v) {
  if (row < 0 || row >= nrows_ || col < 0 || col >= ncols_) throw std::out_of_range("SparseMatrix: index");
  if (v.is_zero()) return;
  auto& r = rows_[row];
  auto [slot, inserted] = r.try_emplace(col, v);
  if (!inserted) {
    slot->second += v;
    if (slot->second.is_zero()) r.erase(slot);
  }
}

int SparseMatrix::rank() const {
  Echelon e(ncols_);
  for (const auto& kv : rows_) e.add_row(kv.second);
  return e.rank();
}

std::vector<std::vector<Scalar>> SparseMatrix::nullspace() const {
  Echelon e(ncols_);
  for (const auto& kv : rows_) e.add_row(kv.second);
  return e.nullspace();
}

Matrix mat_zero(int rows, int cols) { return Matrix(rows, std::vector<Scalar>(cols, Scalar(0))); }

Matrix mat_identity(int n) {
  Matrix m = mat_zero(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  int rows = static_cast<int>(a.size());
  int inner = static_cast<int>(b.size());
  int cols = inner == 0 ? 0 : static_cast<int>(b[0].size());
  Matrix c = mat_zero(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(a[i].size()) != inner) throw std::invalid_argument("mat_mul: shape mismatch");
    for (int k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("mat_add: shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] += b[i][j];
  return c;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) { return mat_add(a, mat_scale(b, Scalar(-1))); }

Matrix mat_scale(const Matrix& a, const Scalar& c) {
  Matrix r = a;
  for (auto& row : r)
    for (auto& x : row) x *= c;
  return r;
}

bool mat_is_zero(const Matrix& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

int mat_rank(const Matrix& a) {
  int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  Echelon e(cols);
  for (const auto& row : a) {
    SparseRow r;
    for (int j = 0; j < cols; ++j)
      if (!row[j].is_zero()) r[j] = row[j];
    e.add_row(std::move(r));
  }
  return e.rank();
}

}  // namespace qtower
