#pragma once

#include "shl/matrix.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace shl {

inline constexpr int kMaxDimension = 8;

/// Strictly increasing set of coframe indices, stored as a bit mask
/// (bit i-1 set for index i).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::uint32_t mask) : mask_(mask) {}
  /// 1-based indices, must be strictly increasing.
  static MultiIndex from_indices(const std::vector<int>& indices);

  std::uint32_t mask() const { return mask_; }
  int degree() const;
  std::vector<int> indices() const;
  bool contains(int index) const { return (mask_ >> (index - 1)) & 1U; }

  /// Lexicographic order on the index tuples (degrees compared first).
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Sign of e^I ∧ e^J relative to e^{I∪J}: parity of the permutation that
/// sorts the concatenation I·J. Zero when I and J overlap.
int wedge_sign(MultiIndex a, MultiIndex b);

/// Canonical lexicographic bases of Λ^k(R^{dim})* for every k.
class ExteriorBasis {
 public:
  /// Cached instance; dim must be in 1..kMaxDimension.
  static const ExteriorBasis& get(int dim);

  int dim() const { return dim_; }
  std::size_t size(int k) const;
  const std::vector<MultiIndex>& basis(int k) const { return bases_.at(static_cast<std::size_t>(k)); }
  std::size_t index_of(MultiIndex m) const { return position_[m.mask()]; }

 private:
  explicit ExteriorBasis(int dim);

  int dim_;
  std::vector<std::vector<MultiIndex>> bases_;
  std::vector<std::size_t> position_;
};

/// All C(dim, k) multi-indices of degree k in lexicographic order.
std::vector<MultiIndex> enumerate_basis(int dim, int k);

/// Dimension of Λ^k, zero outside 0..dim.
std::size_t form_space_size(int dim, int k);

class DegreeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A homogeneous form of fixed degree in coordinates over the canonical basis.
class Form {
 public:
  Form() = default;
  Form(int dim, int degree);
  Form(int dim, int degree, VectorQ coords);

  static Form basis_element(int dim, MultiIndex index, const Rational& coefficient = 1);
  static Form scalar(int dim, const Rational& value);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const VectorQ& coords() const { return coords_; }

  const Rational& coefficient(MultiIndex index) const;
  void add_term(MultiIndex index, const Rational& coefficient);

  bool is_zero() const { return shl::is_zero(coords_); }

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Rational& s);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Rational& s, Form a) { return a *= s; }
  friend Form operator-(Form a) { return a *= Rational(-1); }
  friend bool operator==(const Form& a, const Form& b) = default;

 private:
  int dim_ = 0;
  int degree_ = 0;
  VectorQ coords_;
};

/// Throws DegreeError when deg a + deg b exceeds the ambient dimension.
Form wedge(const Form& a, const Form& b);

/// Matrix of β ↦ a ∧ β from Λ^k to Λ^{k+deg a}.
MatrixQ wedge_matrix(const Form& a, int k);

/// Matrix on Λ^k induced by a linear map on Λ^1: e^I ↦ A e^{i1} ∧ … ∧ A e^{ik}.
/// Entries are the k×k minors of A.
MatrixQ exterior_power(const MatrixQ& a, int k);

/// `-2 e13 + 1/3 e24`; `0` for the zero form. Degree-0 forms print their value.
std::string to_string(const Form& f);
std::string to_string(MultiIndex m);

}  // namespace shl
