#include "shl/subspace.hpp"

namespace shl {

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ambient, MatrixQ(ambient, 0)); }

Subspace Subspace::full(std::size_t ambient) { return Subspace(ambient, MatrixQ::identity(ambient)); }

Subspace Subspace::span(const MatrixQ& columns) {
  Echelon e = echelon(columns.transpose());
  MatrixQ basis(columns.rows(), e.pivots.size());
  for (std::size_t c = 0; c < e.pivots.size(); ++c)
    for (std::size_t r = 0; r < columns.rows(); ++r) basis(r, c) = e.reduced(c, r);
  return Subspace(columns.rows(), std::move(basis));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<VectorQ>& vectors) {
  return span(MatrixQ::from_columns(ambient, vectors));
}

bool Subspace::contains(const VectorQ& v) const {
  if (v.size() != ambient_) throw DimensionError("Subspace::contains: length mismatch");
  return rank(hstack(basis_, MatrixQ::column_vector(v))) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("Subspace::contains: ambient mismatch");
  return rank(hstack(basis_, other.basis_)) == dim();
}

MatrixQ Subspace::annihilator() const {
  Subspace left = kernel(basis_.transpose());
  return left.basis().transpose();
}

VectorQ Subspace::coordinates(const VectorQ& v) const {
  auto x = solve(basis_, v);
  if (!x) throw std::domain_error("Subspace::coordinates: vector not in subspace");
  return *std::move(x);
}

Subspace kernel(const MatrixQ& m) {
  Echelon e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<VectorQ> vectors;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    VectorQ v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), vectors);
}

Subspace image(const MatrixQ& m) { return Subspace::span(m); }

Subspace image(const MatrixQ& m, const Subspace& s) { return Subspace::span(m * s.basis()); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace_sum: ambient dimension mismatch");
  return Subspace::span(hstack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("subspace_intersect: ambient dimension mismatch");
  return kernel(vstack(a.annihilator(), b.annihilator()));
}

Subspace orthogonal_complement(const Subspace& s, const MatrixQ& gram) {
  if (gram.rows() != s.ambient_dim() || !gram.is_square())
    throw DimensionError("orthogonal_complement: Gram shape mismatch");
  return kernel(s.basis().transpose() * gram);
}

}  // namespace shl
