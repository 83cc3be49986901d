#include "shl/lie_model.hpp"

namespace shl {

namespace {

void check_shape(int dim, const std::vector<Form>& d_on_coframe) {
  if (dim % 2 != 0) throw ModelError("odd dimension " + std::to_string(dim));
  if (dim < 2 || dim > kMaxDimension)
    throw ModelError("dimension " + std::to_string(dim) + " out of supported range 2..8");
  if (d_on_coframe.size() != static_cast<std::size_t>(dim))
    throw ModelError("expected one differential per coframe element");
  for (const auto& f : d_on_coframe)
    if (f.dim() != dim || f.degree() != 2) throw ModelError("coframe differentials must be 2-forms");
}

}  // namespace

std::vector<MatrixQ> differential_matrices(int dim, const std::vector<Form>& d_on_coframe) {
  const auto& basis = ExteriorBasis::get(dim);
  std::vector<MatrixQ> d;
  for (int k = 0; k <= dim; ++k) {
    const auto& source = basis.basis(k);
    MatrixQ m(basis.size(k + 1), source.size());
    if (k < dim) {
      for (std::size_t c = 0; c < source.size(); ++c) {
        // d(e^{i1} ∧ … ∧ e^{ik}) = Σ_p (-1)^p e^{i1} ∧ … ∧ de^{ip} ∧ … ∧ e^{ik}
        auto idx = source[c].indices();
        Form total(dim, k + 1);
        for (std::size_t p = 0; p < idx.size(); ++p) {
          Form term = Form::scalar(dim, p % 2 == 0 ? 1 : -1);
          for (std::size_t q = 0; q < idx.size(); ++q) {
            const Form& factor = q == p ? d_on_coframe[static_cast<std::size_t>(idx[p] - 1)]
                                        : Form::basis_element(dim, MultiIndex(1U << (idx[q] - 1)));
            term = wedge(term, factor);
          }
          total += term;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = total.coords()[r];
      }
    }
    d.push_back(std::move(m));
  }
  return d;
}

namespace {

ModelDiagnostics check_matrices(int dim, const std::vector<MatrixQ>& d) {
  ModelDiagnostics diag;
  const auto& basis = ExteriorBasis::get(dim);
  for (int k = 0; k + 1 < dim; ++k) {
    MatrixQ dd = d[static_cast<std::size_t>(k + 1)] * d[static_cast<std::size_t>(k)];
    for (std::size_t c = 0; c < dd.cols(); ++c) {
      if (is_zero(dd.column(c))) continue;
      diag.passed = false;
      diag.failing_degree = k;
      diag.failing_element = basis.basis(k)[c];
      diag.message = "d^2 != 0 on " + to_string(basis.basis(k)[c]) + " (Jacobi identity fails)";
      return diag;
    }
  }
  diag.message = "d^2 = 0 in every degree";
  return diag;
}

}  // namespace

ModelDiagnostics check_complex(int dim, const std::vector<Form>& d_on_coframe) {
  check_shape(dim, d_on_coframe);
  return check_matrices(dim, differential_matrices(dim, d_on_coframe));
}

LieModel::LieModel(int dim, std::vector<Form> d_on_coframe) : dim_(dim), d_on_coframe_(std::move(d_on_coframe)) {
  check_shape(dim_, d_on_coframe_);
  d_ = differential_matrices(dim_, d_on_coframe_);
  auto diag = check_matrices(dim_, d_);
  if (!diag.passed) throw ModelError(diag.message);
}

LieModel LieModel::abelian(int dim) {
  std::vector<Form> zero;
  for (int i = 0; i < dim; ++i) zero.emplace_back(dim, 2);
  return LieModel(dim, std::move(zero));
}

const MatrixQ& LieModel::differential(int k) const {
  if (k < 0 || k > dim_) throw DegreeError("differential: degree out of range");
  return d_[static_cast<std::size_t>(k)];
}

Form LieModel::d(const Form& f) const {
  if (f.dim() != dim_) throw DimensionError("LieModel::d: dimension mismatch");
  if (f.degree() == dim_) throw DegreeError("LieModel::d: no forms above top degree");
  return Form(dim_, f.degree() + 1, differential(f.degree()).apply(f.coords()));
}

bool LieModel::is_unimodular() const { return differential(dim_ - 1).is_zero(); }

MatrixQ differential_matrix(const LieModel& model, int k) { return model.differential(k); }

ModelDiagnostics validate(const LieModel& model) {
  std::vector<MatrixQ> d;
  for (int k = 0; k <= model.dim(); ++k) d.push_back(model.differential(k));
  return check_matrices(model.dim(), d);
}

}  // namespace shl
