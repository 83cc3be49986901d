#include "shl/almost_kahler.hpp"

namespace shl {

MatrixQ two_form_matrix(const Form& omega) {
  if (omega.degree() != 2) throw DegreeError("two_form_matrix: expected a 2-form");
  const auto n = static_cast<std::size_t>(omega.dim());
  MatrixQ m(n, n);
  for (MultiIndex idx : ExteriorBasis::get(omega.dim()).basis(2)) {
    auto ij = idx.indices();
    const auto i = static_cast<std::size_t>(ij[0] - 1);
    const auto j = static_cast<std::size_t>(ij[1] - 1);
    m(i, j) = omega.coefficient(idx);
    m(j, i) = -omega.coefficient(idx);
  }
  return m;
}

Rational AKStructure::inner(const Form& a, const Form& b) const {
  if (a.degree() != b.degree()) throw DegreeError("inner: degree mismatch");
  return dot(a.coords(), gram(a.degree()).apply(b.coords()));
}

namespace {

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Q[comp(I)][I] = sign(e^I ∧ e^{comp(I)}).
MatrixQ complement_signs(int dim, int k) {
  const auto& basis = ExteriorBasis::get(dim);
  const std::uint32_t top = (std::uint32_t{1} << dim) - 1;
  MatrixQ q(basis.size(dim - k), basis.size(k));
  for (std::size_t c = 0; c < basis.basis(k).size(); ++c) {
    MultiIndex idx = basis.basis(k)[c];
    MultiIndex comp(top & ~idx.mask());
    q(basis.index_of(comp), c) = wedge_sign(idx, comp);
  }
  return q;
}

}  // namespace

AKStructure build_structure(const LieModel& model, const Form& omega, const std::optional<MatrixQ>& J,
                            const MatrixQ& metric) {
  const int dim = model.dim();
  const int n = model.half_dim();
  const auto sz = static_cast<std::size_t>(dim);
  if (omega.dim() != dim || omega.degree() != 2)
    throw StructureError(StructureErrorKind::kShape, "omega must be a 2-form in dimension " + std::to_string(dim));
  if (metric.rows() != sz || metric.cols() != sz)
    throw StructureError(StructureErrorKind::kShape, "metric must be " + std::to_string(dim) + "x" + std::to_string(dim));
  if (J && (J->rows() != sz || J->cols() != sz))
    throw StructureError(StructureErrorKind::kShape, "J must be " + std::to_string(dim) + "x" + std::to_string(dim));

  if (!metric.is_symmetric() || !is_positive_definite(metric))
    throw StructureError(StructureErrorKind::kMetricNotPositive, "metric is not symmetric positive definite");
  if (!model.d(omega).is_zero())
    throw StructureError(StructureErrorKind::kNotClosed, "omega is not closed: d omega = " + to_string(model.d(omega)));

  Form top = Form::scalar(dim, 1);
  for (int i = 0; i < n; ++i) top = wedge(top, omega);
  top *= Rational(1) / factorial(n);
  if (top.is_zero()) throw StructureError(StructureErrorKind::kDegenerate, "omega is degenerate (omega^n = 0)");

  const MatrixQ omega_mat = two_form_matrix(omega);
  const MatrixQ j = J ? *J : inverse(omega_mat) * metric;
  const MatrixQ id = MatrixQ::identity(sz);
  if (j * j != -id) throw StructureError(StructureErrorKind::kJNotComplex, "J^2 != -id");
  if (j.transpose() * omega_mat * j != omega_mat)
    throw StructureError(StructureErrorKind::kOmegaNotJInvariant, "omega(J.,J.) != omega");
  if (omega_mat * j != metric)
    throw StructureError(StructureErrorKind::kIncompatibleMetric, "metric differs from g(u,v) = omega(u, Jv)");
  if (!model.is_unimodular())
    throw StructureError(StructureErrorKind::kNotUnimodular,
                         "model is not unimodular (d on degree " + std::to_string(dim - 1) + " is nonzero)");

  AKStructure ak;
  ak.model_ = model;
  ak.omega_ = omega;
  ak.J_ = j;
  ak.metric_ = metric;
  ak.volume_ = top;

  const MatrixQ coframe_gram = inverse(metric);
  const MatrixQ j_transpose = j.transpose();
  const Rational vol = top.coords()[0];
  for (int k = 0; k <= dim; ++k) {
    ak.gram_.push_back(exterior_power(coframe_gram, k));
    ak.gram_inv_.push_back(inverse(ak.gram_.back()));
    ak.j_action_.push_back(exterior_power(j_transpose, k));
    ak.star_.push_back(vol * complement_signs(dim, k) * ak.gram_.back());
  }
  for (int k = 0; k <= dim; ++k) ak.star_inv_.push_back(inverse(ak.star_[static_cast<std::size_t>(k)]));

  std::vector<MatrixQ> l_blocks, lambda_blocks;
  for (int k = 0; k <= dim; ++k) {
    l_blocks.push_back(k + 2 <= dim ? wedge_matrix(omega, k) : MatrixQ(0, form_space_size(dim, k)));
    if (k >= 2) {
      // Λ = ∗⁻¹ L ∗ : Λ^k → Λ^{dim-k} → Λ^{dim-k+2} → Λ^{k-2}
      lambda_blocks.push_back(ak.star_inv_[static_cast<std::size_t>(k - 2)] * wedge_matrix(omega, dim - k) *
                              ak.star_[static_cast<std::size_t>(k)]);
    } else {
      lambda_blocks.emplace_back(0, form_space_size(dim, k));
    }
  }
  ak.L_ = GradedOperator(dim, 2, std::move(l_blocks));
  ak.Lambda_ = GradedOperator(dim, -2, std::move(lambda_blocks));
  return ak;
}

AKStructure build_structure(const ManifoldSpec& spec) {
  return build_structure(spec.model, spec.omega, spec.J, spec.metric);
}

const MatrixQ& hodge_star(const AKStructure& ak, int k) { return ak.star(k); }

LefschetzMaps lefschetz_maps(const AKStructure& ak) { return {ak.L(), ak.Lambda()}; }

Subspace primitive_subspace(const AKStructure& ak, int k) { return kernel(ak.Lambda().block(k)); }

std::vector<LefschetzComponent> lefschetz_decomposition(const AKStructure& ak, const Form& a) {
  const int dim = ak.dim();
  const int n = ak.n();
  const int k = a.degree();
  if (a.dim() != dim) throw DimensionError("lefschetz_decomposition: dimension mismatch");

  struct Piece {
    int r;
    Subspace primitives;
    MatrixQ lifted;  // L^r applied to the primitive basis
  };
  std::vector<Piece> pieces;
  MatrixQ columns(form_space_size(dim, k), 0);
  for (int r = 0; 2 * r <= k; ++r) {
    const int j = k - 2 * r;
    if (j > n || r > n - j) continue;  // L^r kills P^j beyond this range
    Subspace p = primitive_subspace(ak, j);
    MatrixQ lifted = p.basis();
    for (int s = 0; s < r; ++s) lifted = ak.L().block(j + 2 * s) * lifted;
    columns = hstack(columns, lifted);
    pieces.push_back({r, std::move(p), std::move(lifted)});
  }
  auto x = solve(columns, a.coords());
  if (!x || columns.cols() != columns.rows() || rank(columns) != columns.cols())
    throw std::logic_error("lefschetz_decomposition: primitive pieces do not form a direct sum");

  std::vector<LefschetzComponent> out;
  std::size_t offset = 0;
  for (const auto& piece : pieces) {
    VectorQ coeffs(x->begin() + static_cast<std::ptrdiff_t>(offset),
                   x->begin() + static_cast<std::ptrdiff_t>(offset + piece.primitives.dim()));
    offset += piece.primitives.dim();
    Form p(dim, k - 2 * piece.r, piece.primitives.basis().apply(coeffs));
    if (!p.is_zero()) out.push_back({piece.r, std::move(p)});
  }
  return out;
}

TwoFormSplit j_split_2forms(const AKStructure& ak) {
  const MatrixQ& inv = ak.j_action(2);
  const MatrixQ id = MatrixQ::identity(inv.rows());
  TwoFormSplit split{inv, kernel(inv - id), kernel(inv + id), std::nullopt, std::nullopt};
  if (ak.dim() == 4) {
    auto [plus, minus] = sd_asd_split(ak);
    split.plus_g = std::move(plus);
    split.minus_g = std::move(minus);
  }
  return split;
}

std::pair<Subspace, Subspace> sd_asd_split(const AKStructure& ak) {
  if (ak.dim() != 4) throw DimensionError("sd_asd_split: only defined in dimension 4");
  const MatrixQ& star = ak.star(2);
  const MatrixQ id = MatrixQ::identity(star.rows());
  return {kernel(star - id), kernel(star + id)};
}

}  // namespace shl
