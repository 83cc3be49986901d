#pragma once

#include "shl/matrix.hpp"

namespace shl {

/// Linear subspace of Q^ambient. The basis is stored as the columns of a
/// matrix in reduced column-echelon form, so equal subspaces compare equal
/// bit for bit.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  /// Span of the columns of `columns` (dependent columns allowed).
  static Subspace span(const MatrixQ& columns);
  static Subspace span(std::size_t ambient, const std::vector<VectorQ>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const MatrixQ& basis() const { return basis_; }
  VectorQ basis_vector(std::size_t i) const { return basis_.column(i); }

  bool contains(const VectorQ& v) const;
  bool contains(const Subspace& other) const;

  /// Rows spanning the linear constraints that cut out this subspace.
  MatrixQ annihilator() const;

  /// Coordinates of v in the stored basis; throws std::domain_error when v
  /// is not in the subspace.
  VectorQ coordinates(const VectorQ& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  Subspace(std::size_t ambient, MatrixQ basis) : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_ = 0;
  MatrixQ basis_;
};

Subspace kernel(const MatrixQ& m);
Subspace image(const MatrixQ& m);
/// Image of a subspace under a linear map.
Subspace image(const MatrixQ& m, const Subspace& s);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Orthogonal complement with respect to the symmetric bilinear form `gram`.
Subspace orthogonal_complement(const Subspace& s, const MatrixQ& gram);

}  // namespace shl
