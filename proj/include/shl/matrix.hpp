#pragma once

#include "shl/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shl {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over the rationals. Zero-row or zero-column
/// matrices are valid values (maps into or out of a zero-dimensional space).
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows);

  static MatrixQ identity(std::size_t n);
  static MatrixQ from_columns(std::size_t rows, const std::vector<VectorQ>& columns);
  static MatrixQ column_vector(const VectorQ& v) { return from_columns(v.size(), {v}); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  VectorQ row(std::size_t r) const;
  VectorQ column(std::size_t c) const;

  MatrixQ transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  VectorQ apply(const VectorQ& v) const;

  MatrixQ& operator+=(const MatrixQ& o);
  MatrixQ& operator-=(const MatrixQ& o);
  MatrixQ& operator*=(const Rational& s);

  friend MatrixQ operator+(MatrixQ a, const MatrixQ& b) { return a += b; }
  friend MatrixQ operator-(MatrixQ a, const MatrixQ& b) { return a -= b; }
  friend MatrixQ operator*(MatrixQ a, const Rational& s) { return a *= s; }
  friend MatrixQ operator*(const Rational& s, MatrixQ a) { return a *= s; }
  friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
  friend MatrixQ operator-(MatrixQ a) { return a *= Rational(-1); }
  friend bool operator==(const MatrixQ& a, const MatrixQ& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  MatrixQ reduced;                  // reduced row-echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon echelon(const MatrixQ& m);
MatrixQ rref(const MatrixQ& m);
std::size_t rank(const MatrixQ& m);
Rational determinant(const MatrixQ& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<MatrixQ> try_inverse(const MatrixQ& m);
/// Throws std::domain_error when singular.
MatrixQ inverse(const MatrixQ& m);

/// Some x with a·x = b, or nullopt when the system is inconsistent.
std::optional<VectorQ> solve(const MatrixQ& a, const VectorQ& b);

MatrixQ hstack(const MatrixQ& a, const MatrixQ& b);
MatrixQ vstack(const MatrixQ& a, const MatrixQ& b);

/// Sylvester's criterion with exact leading principal minors. Throws
/// DimensionError for non-square input, std::invalid_argument for
/// non-symmetric input.
bool is_positive_definite(const MatrixQ& g);

std::string to_string(const MatrixQ& m);

}  // namespace shl
