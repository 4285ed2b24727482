#pragma once

#include <vector>

#include "heitmann/poly/poly.hpp"

namespace heitmann::genred {

using poly::Poly;
using poly::RingPtr;
using Vec = std::vector<Poly>;

/// Dense rectangular matrix of polynomials over one ring, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(RingPtr ring, int rows, int cols);

  static Matrix identity(const RingPtr& ring, int n);
  /// Throws InputError when the rows are ragged.
  static Matrix from_rows(const RingPtr& ring, const std::vector<Vec>& rows);
  static Matrix from_columns(const RingPtr& ring, int rows, const std::vector<Vec>& cols);

  const RingPtr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Poly& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Poly& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Vec column(int j) const;
  Vec row(int i) const;
  std::vector<Vec> row_list() const;
  Matrix transpose() const;
  Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  /// Columns of this followed by those of `o`.
  Matrix hconcat(const Matrix& o) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  Vec apply(const Vec& v) const;

 private:
  RingPtr ring_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Poly> data_;
};

Poly determinant(const Matrix& m);
/// Transpose of the cofactor matrix, so adj(M)·M = det(M)·I.
Matrix adjugate(const Matrix& m);

struct Minor {
  std::vector<int> rows;
  std::vector<int> cols;
  Poly value;
};

/// Every k×k minor (k ≥ 1), rows and columns in increasing order.
std::vector<Minor> minors(const Matrix& m, int k);
/// Generators of Δ_k: {1} for k ≤ 0, nothing for k beyond the matrix.
Vec determinantal_ideal(const Matrix& m, int k);

Vec add(const Vec& a, const Vec& b);
Vec scale(const Poly& c, const Vec& v);
/// v + Σ t_j·cols[j].
Vec combine(const Vec& v, const std::vector<Vec>& cols, const Vec& t);
Vec zeros(const RingPtr& ring, int n);

}  // namespace heitmann::genred
