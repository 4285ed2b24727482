#include "heitmann/genred/matrix.hpp"

#include <map>
#include <string>

#include "heitmann/errors.hpp"

namespace heitmann::genred {

Matrix::Matrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, Poly(ring_)) {}

Matrix Matrix::identity(const RingPtr& ring, int n) {
  Matrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(ring, 1);
  return m;
}

Matrix Matrix::from_rows(const RingPtr& ring, const std::vector<Vec>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(ring, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InputError("matrix rows have different lengths");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const RingPtr& ring, int rows, const std::vector<Vec>& cols) {
  Matrix m(ring, rows, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows) throw InputError("matrix columns have different lengths");
    for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

Vec Matrix::column(int j) const {
  Vec v;
  for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

Vec Matrix::row(int i) const {
  Vec v;
  for (int j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  for (int i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  Matrix s(ring_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      s.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
  return s;
}

Matrix Matrix::hconcat(const Matrix& o) const {
  if (rows_ != o.rows_) throw InputError("cannot concatenate matrices with different row counts");
  Matrix m(ring_, rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
  }
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix dimensions do not match for a product");
  Matrix m(a.ring_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) m.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix dimensions do not match for a sum");
  Matrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix dimensions do not match for a difference");
  Matrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] -= b.data_[k];
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InputError("vector length does not match the matrix");
  Vec out(rows_, Poly(ring_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

namespace {

// Laplace expansion along the rows, memoised on the set of columns still free.
Poly det_rec(const Matrix& m, int row, unsigned free_cols, std::map<unsigned, Poly>& memo) {
  if (row == m.rows()) return Poly::constant(m.ring(), 1);
  if (auto it = memo.find(free_cols); it != memo.end()) return it->second;
  Poly sum(m.ring());
  int sign_pos = 0;
  for (int j = 0; j < m.cols(); ++j) {
    if (!((free_cols >> j) & 1u)) continue;
    if (!m.at(row, j).is_zero()) {
      Poly term = m.at(row, j) * det_rec(m, row + 1, free_cols & ~(1u << j), memo);
      if (sign_pos % 2) sum -= term;
      else sum += term;
    }
    ++sign_pos;
  }
  memo.emplace(free_cols, sum);
  return sum;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Poly determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  if (m.rows() > 20) throw ResourceError("determinant of a matrix larger than 20x20");
  std::map<unsigned, Poly> memo;
  return det_rec(m, 0, m.cols() == 0 ? 0u : ((1u << m.cols()) - 1), memo);
}

Matrix adjugate(const Matrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw InputError("adjugate of a non-square matrix");
  Matrix adj(m.ring(), n, n);
  if (n == 1) {
    adj.at(0, 0) = Poly::constant(m.ring(), 1);
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> rows, cols;
      for (int r = 0; r < n; ++r)
        if (r != i) rows.push_back(r);
      for (int c = 0; c < n; ++c)
        if (c != j) cols.push_back(c);
      Poly d = determinant(m.submatrix(rows, cols));
      adj.at(j, i) = (i + j) % 2 ? -d : d;
    }
  return adj;
}

std::vector<Minor> minors(const Matrix& m, int k) {
  std::vector<Minor> out;
  if (k < 1 || k > m.rows() || k > m.cols()) return out;
  std::vector<std::vector<int>> rs, cs;
  std::vector<int> cur;
  subsets(m.rows(), k, 0, cur, rs);
  subsets(m.cols(), k, 0, cur, cs);
  for (const auto& r : rs)
    for (const auto& c : cs) out.push_back(Minor{r, c, determinant(m.submatrix(r, c))});
  return out;
}

Vec determinantal_ideal(const Matrix& m, int k) {
  if (k <= 0) return {Poly::constant(m.ring(), 1)};
  Vec out;
  for (auto& mn : minors(m, k))
    if (!mn.value.is_zero()) out.push_back(std::move(mn.value));
  return out;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("vector lengths differ");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec scale(const Poly& c, const Vec& v) {
  Vec out;
  for (const auto& x : v) out.push_back(c * x);
  return out;
}

Vec combine(const Vec& v, const std::vector<Vec>& cols, const Vec& t) {
  Vec out = v;
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (!t[j].is_zero()) out = add(out, scale(t[j], cols[j]));
  return out;
}

Vec zeros(const RingPtr& ring, int n) { return Vec(n, Poly(ring)); }

}  // namespace heitmann::genred
