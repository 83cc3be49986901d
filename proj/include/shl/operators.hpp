#pragma once

#include "shl/almost_kahler.hpp"

namespace shl {

/// Lejmi's operator ψ ↦ Δ_d ψ − (1/n)⟨Δ_d ψ, ω⟩ω restricted to P² = ker Λ ∩ Λ².
struct PJOperator {
  Subspace domain;  // canonical basis of P²
  MatrixQ matrix;   // in the coordinates of that basis
  std::size_t kernel_dim() const { return kernel(matrix).dim(); }
};

/// d of the model as a graded operator of shift +1.
GradedOperator differential_operator(const AKStructure& ak);

/// dᴧ = dΛ − Λd, shift −1.
GradedOperator d_lambda(const AKStructure& ak);

/// Metric adjoint: A*[k+s → k] = gram[k]⁻¹ A[k]ᵀ gram[k+s].
GradedOperator adjoint(const AKStructure& ak, const GradedOperator& op);

/// d*d + dd*.
GradedOperator laplacian_d(const AKStructure& ak);

/// (ddᴧ)(ddᴧ)* + λ(d*d + dᴧ*dᴧ); throws std::invalid_argument unless λ > 0.
GradedOperator laplacian_bc(const AKStructure& ak, const Rational& lambda);

/// (ddᴧ)*(ddᴧ) + λ(dd* + dᴧdᴧ*); throws std::invalid_argument unless λ > 0.
GradedOperator laplacian_aeppli(const AKStructure& ak, const Rational& lambda);

PJOperator p_j(const AKStructure& ak);

/// A structure together with its assembled first-order operators, computed
/// once and shared by the cohomology and theorem modules.
class HodgeComplex {
 public:
  explicit HodgeComplex(AKStructure ak);

  const AKStructure& structure() const { return ak_; }
  int dim() const { return ak_.dim(); }
  int n() const { return ak_.n(); }

  const GradedOperator& d() const { return d_; }
  const GradedOperator& d_adjoint() const { return d_adj_; }
  const GradedOperator& d_lambda() const { return d_lambda_; }
  const GradedOperator& d_lambda_adjoint() const { return d_lambda_adj_; }
  /// d dᴧ, shift 0.
  const GradedOperator& dd_lambda() const { return dd_lambda_; }
  const GradedOperator& dd_lambda_adjoint() const { return dd_lambda_adj_; }
  const GradedOperator& laplacian_d() const { return laplacian_d_; }

  GradedOperator laplacian_bc(const Rational& lambda) const;
  GradedOperator laplacian_aeppli(const Rational& lambda) const;
  PJOperator p_j() const;

 private:
  AKStructure ak_;
  GradedOperator d_, d_adj_, d_lambda_, d_lambda_adj_, dd_lambda_, dd_lambda_adj_, laplacian_d_;
  // Fourth- and second-order parts of the two Laplacians.
  GradedOperator bc_fourth_, bc_second_, ae_fourth_, ae_second_;
};

}  // namespace shl
