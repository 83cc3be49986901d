#include "shl/cohomology.hpp"

#include <algorithm>

namespace shl {

namespace {

std::size_t rank_of_block(const GradedOperator& op, int k) {
  if (k < 0 || k > op.dim()) return 0;
  return rank(op.block(k));
}

Subspace image_into(const GradedOperator& op, int target) {
  const int source = target - op.shift();
  const std::size_t size = form_space_size(op.dim(), target);
  if (source < 0 || source > op.dim()) return Subspace::zero(size);
  return image(op.block(source));
}

}  // namespace

std::size_t betti(const LieModel& model, int k) {
  if (k < 0 || k > model.dim()) throw DegreeError("betti: degree out of range");
  std::size_t closed = kernel(model.differential(k)).dim();
  std::size_t exact = k > 0 ? rank(model.differential(k - 1)) : 0;
  return closed - exact;
}

Subspace harmonic_dR(const HodgeComplex& hc, int k) {
  return subspace_intersect(kernel(hc.d().block(k)), kernel(hc.d_adjoint().block(k)));
}

Subspace harmonic_bc(const HodgeComplex& hc, int k) {
  return subspace_intersect(subspace_intersect(kernel(hc.d().block(k)), kernel(hc.d_lambda().block(k))),
                            kernel(hc.dd_lambda_adjoint().block(k)));
}

Subspace harmonic_aeppli(const HodgeComplex& hc, int k) {
  return subspace_intersect(subspace_intersect(kernel(hc.dd_lambda().block(k)), kernel(hc.d_adjoint().block(k))),
                            kernel(hc.d_lambda_adjoint().block(k)));
}

DimensionWitness h_bc(const HodgeComplex& hc, int k, CohomologyMode mode, const Rational& lambda) {
  if (mode == CohomologyMode::kHarmonic) {
    Subspace ker = kernel(hc.laplacian_bc(lambda).block(k));
    return {ker.dim(), ker};
  }
  // ker(d + dᴧ) on Λ^k: the two summands land in different degrees.
  Subspace closed = subspace_intersect(kernel(hc.d().block(k)), kernel(hc.d_lambda().block(k)));
  return {closed.dim() - rank_of_block(hc.dd_lambda(), k), closed};
}

DimensionWitness h_aeppli(const HodgeComplex& hc, int k, CohomologyMode mode, const Rational& lambda) {
  if (mode == CohomologyMode::kHarmonic) {
    Subspace ker = kernel(hc.laplacian_aeppli(lambda).block(k));
    return {ker.dim(), ker};
  }
  Subspace closed = kernel(hc.dd_lambda().block(k));
  Subspace exact = subspace_sum(image_into(hc.d(), k), image_into(hc.d_lambda(), k));
  return {closed.dim() - exact.dim(), closed};
}

int delta_s(const HodgeComplex& hc, int k) {
  const auto b = static_cast<int>(betti(hc.structure().model(), k));
  const auto bc = static_cast<int>(h_bc(hc, k, CohomologyMode::kQuotient).dim);
  const auto ae = static_cast<int>(h_aeppli(hc, k, CohomologyMode::kQuotient).dim);
  const int by_definition = bc + ae - 2 * b;
  const int by_bc = 2 * (bc - b);
  if (by_definition != by_bc)
    throw InconsistencyError("delta_s(" + std::to_string(k) + "): h_bc + h_ae - 2b = " + std::to_string(by_definition) +
                             " but 2(h_bc - b) = " + std::to_string(by_bc));
  if (by_definition < 0) throw InconsistencyError("delta_s(" + std::to_string(k) + ") is negative");
  return by_definition;
}

JCohomology h_pm_J(const HodgeComplex& hc) {
  TwoFormSplit split = j_split_2forms(hc.structure());
  Subspace closed = kernel(hc.d().block(2));
  Subspace exact = image(hc.d().block(1));
  Subspace z_plus = subspace_intersect(closed, split.plus_J);
  Subspace z_minus = subspace_intersect(closed, split.minus_J);
  const std::size_t h_plus = subspace_sum(z_plus, exact).dim() - exact.dim();
  const std::size_t h_minus = subspace_sum(z_minus, exact).dim() - exact.dim();
  const std::size_t h_sum = subspace_sum(subspace_sum(z_plus, z_minus), exact).dim() - exact.dim();
  const std::size_t b2 = closed.dim() - exact.dim();
  return {h_plus, h_minus, std::move(z_plus), std::move(z_minus), h_plus + h_minus == h_sum, h_sum == b2};
}

HarmonicJSplit harmonic_j_split(const HodgeComplex& hc) {
  TwoFormSplit split = j_split_2forms(hc.structure());
  Subspace harmonic = harmonic_dR(hc, 2);
  Subspace plus = subspace_intersect(harmonic, split.plus_J);
  Subspace minus = subspace_intersect(harmonic, split.minus_J);
  const bool direct = subspace_sum(plus, minus) == harmonic;
  return {std::move(plus), std::move(minus), direct};
}

SelfDualHarmonics harmonic_sd_split(const HodgeComplex& hc) {
  auto [plus_g, minus_g] = sd_asd_split(hc.structure());
  Subspace harmonic = harmonic_dR(hc, 2);
  return {subspace_intersect(harmonic, plus_g), subspace_intersect(harmonic, minus_g)};
}

std::vector<bool> hlc_check(const HodgeComplex& hc) {
  const int n = hc.n();
  const int dim = hc.dim();
  const LieModel& model = hc.structure().model();
  std::vector<bool> out;
  for (int k = 0; k <= n; ++k) {
    Subspace reps = harmonic_dR(hc, k);
    MatrixQ lifted = reps.basis();
    for (int j = k; j < dim - k; j += 2) lifted = hc.structure().L().block(j) * lifted;
    const int top = dim - k;
    Subspace exact = top > 0 ? image(model.differential(top - 1)) : Subspace::zero(form_space_size(dim, top));
    const std::size_t induced_rank = subspace_sum(Subspace::span(lifted), exact).dim() - exact.dim();
    out.push_back(induced_rank == reps.dim() && reps.dim() == betti(model, top));
  }
  return out;
}

Subspace v_space(const HodgeComplex& hc) {
  return subspace_intersect(harmonic_bc(hc, 2), image(hc.d().block(1)));
}

CohomologyReport build_report(const HodgeComplex& hc, const Rational& lambda) {
  CohomologyReport r{};
  r.dim = hc.dim();
  r.lambda = lambda;
  const LieModel& model = hc.structure().model();
  for (int k = 0; k <= hc.dim(); ++k) {
    DegreeCohomology dc{};
    dc.k = k;
    dc.b = betti(model, k);
    dc.h_bc = h_bc(hc, k, CohomologyMode::kQuotient).dim;
    dc.h_bc_harmonic = h_bc(hc, k, CohomologyMode::kHarmonic, lambda).dim;
    dc.h_ae = h_aeppli(hc, k, CohomologyMode::kQuotient).dim;
    dc.h_ae_harmonic = h_aeppli(hc, k, CohomologyMode::kHarmonic, lambda).dim;
    if (dc.h_bc != dc.h_bc_harmonic || dc.h_ae != dc.h_ae_harmonic)
      throw InconsistencyError("degree " + std::to_string(k) + ": quotient and harmonic dimensions disagree");
    if (harmonic_dR(hc, k).dim() != dc.b)
      throw InconsistencyError("degree " + std::to_string(k) + ": harmonic forms do not match the Betti number");
    dc.delta_s = delta_s(hc, k);
    r.degrees.push_back(dc);
  }
  JCohomology j = h_pm_J(hc);
  r.h_plus_J = j.h_plus;
  r.h_minus_J = j.h_minus;
  r.pure_and_full = j.pure && j.full;
  r.dim_ker_PJ = hc.p_j().kernel_dim();
  if (hc.dim() == 4) {
    SelfDualHarmonics sd = harmonic_sd_split(hc);
    r.b2_plus = sd.plus.dim();
    r.b2_minus = sd.minus.dim();
  }
  r.harmonic_dR2 = harmonic_dR(hc, 2);
  r.harmonic_bc2 = harmonic_bc(hc, 2);
  r.V = v_space(hc);
  r.dim_V = r.V.dim();
  r.hlc = hlc_check(hc);
  r.hlc_holds = std::all_of(r.hlc.begin(), r.hlc.end(), [](bool b) { return b; });
  r.harmonic_j_split = harmonic_j_split(hc).is_direct_sum;
  r.harmonic_dR_in_bc = r.harmonic_bc2.contains(r.harmonic_dR2);
  return r;
}

}  // namespace shl
