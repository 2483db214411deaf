#pragma once

#include <map>
#include <vector>

#include "qtower/scalar.hpp"

namespace qtower {

using SparseRow = std::map<int, Scalar>;
using Matrix = std::vector<std::vector<Scalar>>;  // row-major, dense

Matrix mat_zero(int rows, int cols);
Matrix mat_identity(int n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Matrix& a, const Scalar& c);
bool mat_is_zero(const Matrix& a);
// Rank by exact elimination.
int mat_rank(const Matrix& a);

// Exact row echelon form built incrementally over Scalar. Each stored row
// is normalized to pivot coefficient 1 at its smallest column.
class Echelon {
 public:
  explicit Echelon(int ncols) : ncols_(ncols) {}

  // Reduces the row against the stored pivots; stores it if it is
  // independent. Returns true when the rank grew.
  bool add_row(SparseRow row);

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(pivots_.size()); }

  // Basis of {x : R x = 0}, one dense vector per free column, in
  // increasing free-column order.
  std::vector<std::vector<Scalar>> nullspace() const;

 private:
  void reduce(SparseRow& row) const;
  int ncols_;
  std::map<int, SparseRow> pivots_;  // pivot column -> row
};

// Collects matrix entries by (row, col) and hands rows to Echelon.
class SparseMatrix {
 public:
  SparseMatrix(int nrows, int ncols) : nrows_(nrows), ncols_(ncols) {}
  void add(int row, int col, const Scalar& v);
  int nrows() const { return nrows_; }
  int ncols() const { return ncols_; }
  const std::map<int, SparseRow>& rows() const { return rows_; }

  int rank() const;
  std::vector<std::vector<Scalar>> nullspace() const;

 private:
  int nrows_;
  int ncols_;
  std::map<int, SparseRow> rows_;
};

}  // namespace qtower
