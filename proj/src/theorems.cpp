#include "shl/theorems.hpp"

#include <algorithm>

namespace shl {

namespace {

std::string str(bool b) { return b ? "true" : "false"; }
std::string str(std::size_t v) { return std::to_string(v); }
std::string str(int v) { return std::to_string(v); }

TheoremVerdict implication(std::string id, bool hypothesis, bool conclusion) {
  TheoremVerdict v;
  v.claim_id = std::move(id);
  v.hypothesis_holds = hypothesis;
  v.conclusion_holds = conclusion;
  v.consistent = !hypothesis || conclusion;
  if (!hypothesis) v.detail = "hypothesis not met";
  return v;
}

TheoremVerdict equivalence(std::string id, bool left, bool right) {
  TheoremVerdict v;
  v.claim_id = std::move(id);
  v.hypothesis_holds = left;
  v.conclusion_holds = right;
  v.consistent = left == right;
  return v;
}

void require_dim(const HodgeComplex& hc, bool ok, const char* what) {
  if (!ok) throw DimensionError(std::string(what) + " does not apply in dimension " + std::to_string(hc.dim()));
}

std::string rows_of(const Subspace& s) {
  std::string out;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    VectorQ v = s.basis_vector(i);
    out += i ? "; " : "";
    for (std::size_t j = 0; j < v.size(); ++j) out += (j ? " " : "") + to_string(v[j]);
  }
  return out.empty() ? "0" : out;
}

bool pj_hypothesis(const HodgeComplex& hc, std::size_t& ker_pj, std::size_t& b2) {
  ker_pj = hc.p_j().kernel_dim();
  b2 = betti(hc.structure().model(), 2);
  return ker_pj + 1 == b2;
}

}  // namespace

TheoremVerdict check_theorem1(const HodgeComplex& hc) {
  require_dim(hc, hc.dim() >= 4, "Theorem 1");
  std::size_t ker_pj = 0, b2 = 0;
  const bool hyp = pj_hypothesis(hc, ker_pj, b2);
  HarmonicJSplit split = harmonic_j_split(hc);
  Subspace harm = harmonic_dR(hc, 2);
  Subspace harm_bc = harmonic_bc(hc, 2);
  const bool inclusion = harm_bc.contains(harm);
  TheoremVerdict v = implication("T1", hyp, split.is_direct_sum && inclusion);
  v.witnesses = {{"dim_ker_PJ", str(ker_pj)},
                 {"b2", str(b2)},
                 {"dim_H_plus_J", str(split.plus.dim())},
                 {"dim_H_minus_J", str(split.minus.dim())},
                 {"harmonic_j_split", str(split.is_direct_sum)},
                 {"harmonic_dR_in_bc", str(inclusion)}};
  if (!v.consistent) v.witnesses.emplace_back("harmonic_dR.2", rows_of(harm));
  return v;
}

TheoremVerdict check_harmonic_decomposition(const HodgeComplex& hc) {
  require_dim(hc, hc.dim() >= 4, "the harmonic decomposition criterion");
  std::size_t ker_pj = 0, b2 = 0;
  const bool hyp = pj_hypothesis(hc, ker_pj, b2);
  HarmonicJSplit split = harmonic_j_split(hc);
  TheoremVerdict v = equivalence("P_harm_decomp", hyp, split.is_direct_sum);
  v.witnesses = {{"dim_ker_PJ", str(ker_pj)}, {"b2", str(b2)}, {"harmonic_j_split", str(split.is_direct_sum)}};
  return v;
}

TheoremVerdict check_theorem2(const HodgeComplex& hc) {
  require_dim(hc, hc.dim() == 4, "Theorem 2");
  // Three disjoint routes: subspace split, P_J restriction, subspace containment.
  const bool c1 = harmonic_j_split(hc).is_direct_sum;
  std::size_t ker_pj = 0, b2 = 0;
  const bool c2 = pj_hypothesis(hc, ker_pj, b2);
  const bool c3 = harmonic_bc(hc, 2).contains(harmonic_dR(hc, 2));
  JCohomology j = h_pm_J(hc);
  SelfDualHarmonics sd = harmonic_sd_split(hc);
  const bool c2_annotation = j.h_minus + 1 == sd.plus.dim();
  const bool byproduct = !(c1 && c2 && c3) || j.h_plus == sd.minus.dim() + 1;

  TheoremVerdict v;
  v.claim_id = "T2";
  v.hypothesis_holds = true;
  v.conclusion_holds = c1 == c2 && c2 == c3 && c2 == c2_annotation && byproduct;
  v.consistent = v.conclusion_holds;
  v.detail = "(1)=" + str(c1) + " (2)=" + str(c2) + " (3)=" + str(c3);
  v.witnesses = {{"condition1", str(c1)},
                 {"condition2", str(c2)},
                 {"condition3", str(c3)},
                 {"h_minus_J_eq_b2_plus_minus_1", str(c2_annotation)},
                 {"h_plus_J", str(j.h_plus)},
                 {"h_minus_J", str(j.h_minus)},
                 {"b2_plus", str(sd.plus.dim())},
                 {"b2_minus", str(sd.minus.dim())},
                 {"dim_ker_PJ", str(ker_pj)}};
  return v;
}

TheoremVerdict check_theorem2_identity(const HodgeComplex& hc) {
  require_dim(hc, hc.dim() == 4, "the Theorem 2 proof identity");
  const AKStructure& ak = hc.structure();
  auto [plus_g, minus_g] = sd_asd_split(ak);
  TwoFormSplit split = j_split_2forms(ak);
  Subspace closed_sd = subspace_intersect(kernel(hc.d().block(2)), plus_g);
  const bool condition3 = harmonic_bc(hc, 2).contains(harmonic_dR(hc, 2));
  const MatrixQ j3_inverse = inverse(ak.j_action(3));
  const MatrixQ rhs_map = -(ak.star(3) * j3_inverse * hc.d().block(2) * ak.j_action(2) * ak.star(2));

  bool identity_ok = true;
  bool decomposition_ok = true;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < closed_sd.dim(); ++i) {
    VectorQ alpha = closed_sd.basis_vector(i);
    if (hc.d_lambda().block(2).apply(alpha) != rhs_map.apply(alpha)) {
      identity_ok = false;
      ++failures;
    }
    if (!condition3) continue;
    Form a(ak.dim(), 2, alpha);
    Rational f = ak.inner(a, ak.omega()) / ak.n();
    Form gamma = a - f * ak.omega();
    const bool f_closed = is_zero(hc.d().block(0).apply({f}));
    if (!split.minus_J.contains(gamma.coords()) || !f_closed || !hc.structure().model().d(gamma).is_zero()) {
      decomposition_ok = false;
      ++failures;
    }
  }
  TheoremVerdict v;
  v.claim_id = "T2_identity";
  v.hypothesis_holds = true;
  v.conclusion_holds = identity_ok && decomposition_ok;
  v.consistent = v.conclusion_holds;
  v.witnesses = {{"closed_self_dual_dim", str(closed_sd.dim())},
                 {"identity_holds", str(identity_ok)},
                 {"condition3", str(condition3)},
                 {"decomposition_holds", str(decomposition_ok)},
                 {"failures", str(failures)}};
  return v;
}

TheoremVerdict check_v_proposition(const HodgeComplex& hc) {
  std::size_t ker_pj = 0, b2 = 0;
  const bool hyp = pj_hypothesis(hc, ker_pj, b2);
  Subspace harm = harmonic_dR(hc, 2);
  Subspace harm_bc = harmonic_bc(hc, 2);
  Subspace v_sp = v_space(hc);
  const int ds2 = delta_s(hc, 2);
  const bool direct = subspace_intersect(harm, v_sp).dim() == 0 && subspace_sum(harm, v_sp) == harm_bc;
  const bool dims = 2 * static_cast<int>(v_sp.dim()) == ds2;
  TheoremVerdict v = implication("P_V", hyp, direct && dims);
  v.witnesses = {{"dim_V", str(v_sp.dim())},
                 {"delta_s.2", str(ds2)},
                 {"dim_harmonic_dR.2", str(harm.dim())},
                 {"dim_harmonic_bc.2", str(harm_bc.dim())},
                 {"direct_sum", str(direct)}};
  if (!v.consistent) v.witnesses.emplace_back("V", rows_of(v_sp));
  return v;
}

TheoremVerdict check_dlz_bounds(const HodgeComplex& hc) {
  require_dim(hc, hc.dim() == 4, "the DLZ bounds");
  JCohomology j = h_pm_J(hc);
  SelfDualHarmonics sd = harmonic_sd_split(hc);
  const bool lower = j.h_plus >= sd.minus.dim() + 1;
  const bool upper = j.h_minus + 1 <= sd.plus.dim();
  TheoremVerdict v = implication("DLZ_bounds", true, lower && upper);
  v.witnesses = {{"h_plus_J", str(j.h_plus)},
                 {"h_minus_J", str(j.h_minus)},
                 {"b2_plus", str(sd.plus.dim())},
                 {"b2_minus", str(sd.minus.dim())}};
  return v;
}

TheoremVerdict check_b2plus_corollary(const HodgeComplex& hc) {
  require_dim(hc, hc.dim() == 4, "the b2+ = 1 corollary");
  SelfDualHarmonics sd = harmonic_sd_split(hc);
  JCohomology j = h_pm_J(hc);
  Subspace harm = harmonic_dR(hc, 2);
  Subspace omega_line = Subspace::span(form_space_size(4, 2), {hc.structure().omega().coords()});
  const bool split = subspace_intersect(omega_line, sd.minus).dim() == 0 && subspace_sum(omega_line, sd.minus) == harm;
  const bool inclusion = harmonic_bc(hc, 2).contains(harm);
  TheoremVerdict v = implication("C_b2plus1", sd.plus.dim() == 1, j.h_minus == 0 && split && inclusion);
  v.witnesses = {{"b2_plus", str(sd.plus.dim())},
                 {"h_minus_J", str(j.h_minus)},
                 {"omega_plus_asd_split", str(split)},
                 {"harmonic_dR_in_bc", str(inclusion)}};
  return v;
}

TheoremVerdict check_delta1(const HodgeComplex& hc) {
  const int d1 = delta_s(hc, 1);
  TheoremVerdict v = implication("R_delta1", true, d1 == 0);
  v.witnesses = {{"delta_s.1", str(d1)}};
  return v;
}

TheoremVerdict check_higher_dim_remark(const HodgeComplex& hc) {
  require_dim(hc, hc.dim() >= 6, "the higher-dimensional remark");
  const AKStructure& ak = hc.structure();
  const int n = ak.n();
  Subspace harm = harmonic_dR(hc, 2);
  const bool hyp = harmonic_bc(hc, 2).contains(harm);
  const MatrixQ& involution = ak.j_action(2);
  const Rational half(1, 2);

  bool ok = true;
  std::size_t failures = 0;
  for (std::size_t i = 0; hyp && i < harm.dim(); ++i) {
    Form a(ak.dim(), 2, harm.basis_vector(i));
    Form ja(ak.dim(), 2, involution.apply(a.coords()));
    Form plus = half * (a + ja);
    Form minus = half * (a - ja);
    Rational f = ak.inner(plus, ak.omega()) / n;
    Form plus0 = plus - f * ak.omega();

    auto lift = [&](const Form& three_form) {
      MatrixQ m = MatrixQ::column_vector(three_form.coords());
      for (int s = 0; s < n - 2; ++s) m = ak.L().block(3 + 2 * s) * m;
      return m.is_zero();
    };
    const bool checks[] = {
        is_zero(hc.d().block(0).apply({f})),
        is_zero(ak.Lambda().block(2).apply(plus0.coords())),
        is_zero(hc.d_adjoint().block(2).apply(plus0.coords())),
        is_zero(hc.d_adjoint().block(2).apply(minus.coords())),
        lift(ak.model().d(plus0)),
        lift(ak.model().d(minus)),
    };
    if (!std::all_of(std::begin(checks), std::end(checks), [](bool b) { return b; })) {
      ok = false;
      ++failures;
    }
  }
  TheoremVerdict v = implication("R_higher_dim", hyp, ok);
  v.witnesses = {{"harmonic_dR_in_bc", str(hyp)}, {"checked_forms", str(harm.dim())}, {"failures", str(failures)}};
  return v;
}

TheoremVerdict check_hlc_equivalence(const HodgeComplex& hc) {
  std::vector<bool> hlc = hlc_check(hc);
  const bool hlc_all = std::all_of(hlc.begin(), hlc.end(), [](bool b) { return b; });
  bool delta_zero = true;
  bool betti_eq = true;
  for (int k = 0; k <= hc.dim(); ++k) {
    delta_zero = delta_zero && delta_s(hc, k) == 0;
    betti_eq = betti_eq && betti(hc.structure().model(), k) == h_bc(hc, k, CohomologyMode::kQuotient).dim;
  }
  TheoremVerdict v;
  v.claim_id = "HLC_equiv";
  v.hypothesis_holds = hlc_all;
  v.conclusion_holds = delta_zero && betti_eq;
  v.consistent = hlc_all == delta_zero && delta_zero == betti_eq;
  v.witnesses = {{"hlc", str(hlc_all)}, {"delta_s_all_zero", str(delta_zero)}, {"b_eq_h_bc", str(betti_eq)}};
  return v;
}

std::optional<TheoremFilter> parse_theorem_filter(std::string_view name) {
  static const std::pair<std::string_view, TheoremFilter> kNames[] = {
      {"all", TheoremFilter::kAll},         {"t1", TheoremFilter::kT1},         {"t2", TheoremFilter::kT2},
      {"v", TheoremFilter::kV},             {"dlz", TheoremFilter::kDlz},       {"remark6", TheoremFilter::kRemark6},
      {"p1", TheoremFilter::kHarmonic},     {"delta1", TheoremFilter::kDelta1}, {"hlc", TheoremFilter::kHlc},
      {"t2proof", TheoremFilter::kT2Identity},
  };
  for (const auto& [key, value] : kNames)
    if (key == name) return value;
  return std::nullopt;
}

std::vector<TheoremVerdict> run_theorems(const HodgeComplex& hc, TheoremFilter filter) {
  auto want = [&](TheoremFilter f) { return filter == TheoremFilter::kAll || filter == f; };
  const int dim = hc.dim();
  std::vector<TheoremVerdict> out;
  if (dim >= 4 && want(TheoremFilter::kT1)) out.push_back(check_theorem1(hc));
  if (dim >= 4 && want(TheoremFilter::kHarmonic)) out.push_back(check_harmonic_decomposition(hc));
  if (dim == 4 && want(TheoremFilter::kT2)) out.push_back(check_theorem2(hc));
  if (dim == 4 && want(TheoremFilter::kT2Identity)) out.push_back(check_theorem2_identity(hc));
  if (want(TheoremFilter::kV)) out.push_back(check_v_proposition(hc));
  if (dim == 4 && want(TheoremFilter::kDlz)) {
    out.push_back(check_dlz_bounds(hc));
    out.push_back(check_b2plus_corollary(hc));
  }
  if (want(TheoremFilter::kDelta1)) out.push_back(check_delta1(hc));
  if (dim >= 6 && want(TheoremFilter::kRemark6)) out.push_back(check_higher_dim_remark(hc));
  if (want(TheoremFilter::kHlc)) out.push_back(check_hlc_equivalence(hc));
  return out;
}

bool all_consistent(const std::vector<TheoremVerdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const TheoremVerdict& v) { return v.consistent; });
}

}  // namespace shl
