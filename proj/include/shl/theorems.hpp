#pragma once

#include "shl/cohomology.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace shl {

/// Outcome of checking one claim on one structure. `consistent` is false only
/// when the claim is falsified: for implications, hypothesis ∧ ¬conclusion;
/// for equivalences, hypothesis ≠ conclusion.
struct TheoremVerdict {
  std::string claim_id;
  bool hypothesis_holds = true;
  bool conclusion_holds = true;
  bool consistent = true;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> witnesses;
};

/// dim ker P_J = b₂ − 1 ⟹ ℋ²_dR = ℋ⁺_J ⊕ ℋ⁻_J ⊆ ℋ²_{d+dᴧ}.  (T1)
TheoremVerdict check_theorem1(const HodgeComplex& hc);
/// ℋ²_dR = ℋ⁺_J ⊕ ℋ⁻_J ⟺ dim ker P_J = b₂ − 1.  (P_harm_decomp)
TheoremVerdict check_harmonic_decomposition(const HodgeComplex& hc);
/// Dimension 4: the three conditions agree, and h⁻_J = b₂⁺ − 1 ⟺ condition (2).  (T2)
TheoremVerdict check_theorem2(const HodgeComplex& hc);
/// Dimension 4: dᴧα = −∗J⁻¹dJ∗α on closed self-dual α, and α = fω + γ⁻_J
/// with df = 0, dγ⁻_J = 0 when ℋ² ⊆ ℋ²_{d+dᴧ}.  (T2_identity)
TheoremVerdict check_theorem2_identity(const HodgeComplex& hc);
/// ℋ²_dR ⊕ V = ℋ²_{d+dᴧ} with V = ℋ²_{d+dᴧ} ∩ Im d and dim V = Δ_s²/2.  (P_V)
TheoremVerdict check_v_proposition(const HodgeComplex& hc);
/// Dimension 4: h⁺_J ≥ b₂⁻ + 1 and h⁻_J ≤ b₂⁺ − 1.  (DLZ_bounds)
TheoremVerdict check_dlz_bounds(const HodgeComplex& hc);
/// Dimension 4: b₂⁺ = 1 ⟹ h⁻_J = 0 and ℋ² = Rω ⊕ ℋ⁻_g ⊆ ℋ²_{d+dᴧ}.  (C_b2plus1)
TheoremVerdict check_b2plus_corollary(const HodgeComplex& hc);
/// Δ_s¹ = 0.  (R_delta1)
TheoremVerdict check_delta1(const HodgeComplex& hc);
/// Dimension ≥ 6: harmonic α = fω + α₀⁺ + α⁻_J has df = 0, d*α₀⁺ = d*α⁻_J = 0.  (R_higher_dim)
TheoremVerdict check_higher_dim_remark(const HodgeComplex& hc);
/// HLC ⟺ Δ_s^k = 0 ∀k ⟺ b_k = h^k_{d+dᴧ} ∀k.  (HLC_equiv)
TheoremVerdict check_hlc_equivalence(const HodgeComplex& hc);

enum class TheoremFilter { kAll, kT1, kT2, kV, kDlz, kRemark6, kHarmonic, kDelta1, kHlc, kT2Identity };

/// Accepts all | t1 | t2 | v | dlz | remark6 | p1 | delta1 | hlc | t2proof.
std::optional<TheoremFilter> parse_theorem_filter(std::string_view name);

/// Runs every selected claim whose dimension requirement the structure meets.
std::vector<TheoremVerdict> run_theorems(const HodgeComplex& hc, TheoremFilter filter = TheoremFilter::kAll);

bool all_consistent(const std::vector<TheoremVerdict>& verdicts);

}  // namespace shl
