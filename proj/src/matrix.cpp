#include "shl/matrix.hpp"

#include <sstream>
#include <utility>

namespace shl {

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("MatrixQ: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::from_columns(std::size_t rows, const std::vector<VectorQ>& columns) {
  MatrixQ m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

VectorQ MatrixQ::row(std::size_t r) const {
  return VectorQ(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

VectorQ MatrixQ::column(std::size_t c) const {
  VectorQ v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool MatrixQ::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool MatrixQ::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

VectorQ MatrixQ::apply(const VectorQ& v) const {
  if (v.size() != cols_) throw DimensionError("apply: vector length mismatch");
  VectorQ out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(v[c]) != 0) s += (*this)(r, c) * v[c];
    out[r] = std::move(s);
  }
  return out;
}

MatrixQ& MatrixQ::operator+=(const MatrixQ& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

MatrixQ& MatrixQ::operator-=(const MatrixQ& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

MatrixQ& MatrixQ::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimension mismatch");
  MatrixQ p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) p(i, j) += aik * b(k, j);
    }
  return p;
}

Echelon echelon(const MatrixQ& m) {
  Echelon e{m, {}};
  MatrixQ& a = e.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < a.rows() && sgn(a(found, col)) == 0) ++found;
    if (found == a.rows()) continue;
    if (found != pivot_row)
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(found, c), a(pivot_row, c));
    Rational inv = 1 / a(pivot_row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || sgn(a(r, col)) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (sgn(a(pivot_row, c)) != 0) a(r, c) -= f * a(pivot_row, c);
    }
    e.pivots.push_back(col);
    ++pivot_row;
  }
  return e;
}

MatrixQ rref(const MatrixQ& m) { return echelon(m).reduced; }

std::size_t rank(const MatrixQ& m) { return echelon(m).pivots.size(); }

Rational determinant(const MatrixQ& m) {
  if (!m.is_square()) throw DimensionError("determinant: matrix not square");
  MatrixQ a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(a(p, col)) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(a(r, col)) == 0) continue;
      Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

std::optional<MatrixQ> try_inverse(const MatrixQ& m) {
  if (!m.is_square()) throw DimensionError("inverse: matrix not square");
  const std::size_t n = m.rows();
  Echelon e = echelon(hstack(m, MatrixQ::identity(n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  MatrixQ inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

MatrixQ inverse(const MatrixQ& m) {
  auto inv = try_inverse(m);
  if (!inv) throw std::domain_error("inverse: matrix is singular");
  return *std::move(inv);
}

std::optional<VectorQ> solve(const MatrixQ& a, const VectorQ& b) {
  if (b.size() != a.rows()) throw DimensionError("solve: right-hand side length mismatch");
  Echelon e = echelon(hstack(a, MatrixQ::column_vector(b)));
  VectorQ x(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == a.cols()) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, a.cols());
  }
  return x;
}

MatrixQ hstack(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack: row count mismatch");
  MatrixQ m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

MatrixQ vstack(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack: column count mismatch");
  MatrixQ m(a.rows() + b.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r) m(a.rows() + r, c) = b(r, c);
  }
  return m;
}

bool is_positive_definite(const MatrixQ& g) {
  if (!g.is_square()) throw DimensionError("is_positive_definite: matrix not square");
  if (!g.is_symmetric()) throw std::invalid_argument("is_positive_definite: matrix not symmetric");
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    MatrixQ minor(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) minor(r, c) = g(r, c);
    if (sgn(determinant(minor)) <= 0) return false;
  }
  return true;
}

std::string to_string(const MatrixQ& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << to_string(m(r, c));
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace shl
