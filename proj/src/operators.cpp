#include "shl/operators.hpp"

#include <stdexcept>

namespace shl {

GradedOperator differential_operator(const AKStructure& ak) {
  std::vector<MatrixQ> blocks;
  for (int k = 0; k <= ak.dim(); ++k) blocks.push_back(ak.model().differential(k));
  return GradedOperator(ak.dim(), 1, std::move(blocks));
}

GradedOperator d_lambda(const AKStructure& ak) {
  GradedOperator d = differential_operator(ak);
  return d * ak.Lambda() - ak.Lambda() * d;
}

GradedOperator adjoint(const AKStructure& ak, const GradedOperator& op) {
  const int dim = ak.dim();
  const int s = op.shift();
  std::vector<MatrixQ> blocks;
  for (int j = 0; j <= dim; ++j) {
    const int k = j - s;  // the adjoint maps Λ^j back to Λ^k
    if (k < 0 || k > dim) {
      blocks.emplace_back(0, form_space_size(dim, j));
      continue;
    }
    blocks.push_back(ak.gram_inverse(k) * op.block(k).transpose() * ak.gram(j));
  }
  return GradedOperator(dim, -s, std::move(blocks));
}

GradedOperator laplacian_d(const AKStructure& ak) {
  GradedOperator d = differential_operator(ak);
  GradedOperator d_adj = adjoint(ak, d);
  return d_adj * d + d * d_adj;
}

namespace {

void require_positive(const Rational& lambda) {
  if (sgn(lambda) <= 0) throw std::invalid_argument("lambda must be positive, got " + to_string(lambda));
}

}  // namespace

GradedOperator laplacian_bc(const AKStructure& ak, const Rational& lambda) {
  return HodgeComplex(ak).laplacian_bc(lambda);
}

GradedOperator laplacian_aeppli(const AKStructure& ak, const Rational& lambda) {
  return HodgeComplex(ak).laplacian_aeppli(lambda);
}

PJOperator p_j(const AKStructure& ak) { return HodgeComplex(ak).p_j(); }

HodgeComplex::HodgeComplex(AKStructure ak) : ak_(std::move(ak)) {
  d_ = differential_operator(ak_);
  d_adj_ = adjoint(ak_, d_);
  d_lambda_ = d_ * ak_.Lambda() - ak_.Lambda() * d_;
  d_lambda_adj_ = adjoint(ak_, d_lambda_);
  dd_lambda_ = d_ * d_lambda_;
  dd_lambda_adj_ = adjoint(ak_, dd_lambda_);
  laplacian_d_ = d_adj_ * d_ + d_ * d_adj_;
  bc_fourth_ = dd_lambda_ * dd_lambda_adj_;
  bc_second_ = d_adj_ * d_ + d_lambda_adj_ * d_lambda_;
  ae_fourth_ = dd_lambda_adj_ * dd_lambda_;
  ae_second_ = d_ * d_adj_ + d_lambda_ * d_lambda_adj_;
}

GradedOperator HodgeComplex::laplacian_bc(const Rational& lambda) const {
  require_positive(lambda);
  return bc_fourth_ + lambda * bc_second_;
}

GradedOperator HodgeComplex::laplacian_aeppli(const Rational& lambda) const {
  require_positive(lambda);
  return ae_fourth_ + lambda * ae_second_;
}

PJOperator HodgeComplex::p_j() const {
  PJOperator pj{primitive_subspace(ak_, 2), {}};
  const Form& omega = ak_.omega();
  const Rational inv_n = Rational(1, ak_.n());
  const MatrixQ& lap = laplacian_d_.block(2);
  std::vector<VectorQ> columns;
  for (std::size_t i = 0; i < pj.domain.dim(); ++i) {
    Form lap_psi(ak_.dim(), 2, lap.apply(pj.domain.basis_vector(i)));
    Rational trace = ak_.inner(lap_psi, omega) * inv_n;
    Form image = lap_psi - trace * omega;
    if (!is_zero(ak_.Lambda().block(2).apply(image.coords())))
      throw std::logic_error("P_J image left the primitive 2-forms");
    columns.push_back(pj.domain.coordinates(image.coords()));
  }
  pj.matrix = MatrixQ::from_columns(pj.domain.dim(), columns);
  return pj;
}

}  // namespace shl
