#pragma once

#include "shl/operators.hpp"

#include <optional>
#include <vector>

namespace shl {

/// Raised when two independent routes to the same quantity disagree; always a
/// bug in operator assembly, never a property of the input.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class CohomologyMode { kQuotient, kHarmonic };

struct DimensionWitness {
  std::size_t dim;
  /// Quotient mode: the numerator space. Harmonic mode: the Laplacian kernel.
  Subspace witness;
};

std::size_t betti(const LieModel& model, int k);

/// ker d ∩ ker d* on Λ^k.
Subspace harmonic_dR(const HodgeComplex& hc, int k);

/// ker d ∩ ker dᴧ ∩ ker (ddᴧ)* on Λ^k.
Subspace harmonic_bc(const HodgeComplex& hc, int k);

/// ker (ddᴧ) ∩ ker d* ∩ ker dᴧ* on Λ^k.
Subspace harmonic_aeppli(const HodgeComplex& hc, int k);

DimensionWitness h_bc(const HodgeComplex& hc, int k, CohomologyMode mode, const Rational& lambda = 1);
DimensionWitness h_aeppli(const HodgeComplex& hc, int k, CohomologyMode mode, const Rational& lambda = 1);

/// h_bc + h_ae − 2b, cross-checked against 2(h_bc − b). Throws
/// InconsistencyError when the two disagree or the value is negative.
int delta_s(const HodgeComplex& hc, int k);

struct JCohomology {
  std::size_t h_plus;
  std::size_t h_minus;
  Subspace z_plus;   // closed J-invariant 2-forms
  Subspace z_minus;  // closed J-anti-invariant 2-forms
  bool pure;         // H⁺ ∩ H⁻ = 0
  bool full;         // H⁺ + H⁻ = H²
};

JCohomology h_pm_J(const HodgeComplex& hc);

struct HarmonicJSplit {
  Subspace plus;   // ℋ⁺_J
  Subspace minus;  // ℋ⁻_J
  bool is_direct_sum;
};

HarmonicJSplit harmonic_j_split(const HodgeComplex& hc);

struct SelfDualHarmonics {
  Subspace plus;
  Subspace minus;
};

/// Self-dual and anti-self-dual harmonic 2-forms; dimension 4 only.
SelfDualHarmonics harmonic_sd_split(const HodgeComplex& hc);

/// Entry k (0 ≤ k ≤ n): L^{n−k} induces an isomorphism H^k → H^{2n−k}.
std::vector<bool> hlc_check(const HodgeComplex& hc);

/// ℋ²_{d+dᴧ} ∩ Im d.
Subspace v_space(const HodgeComplex& hc);

struct DegreeCohomology {
  int k;
  std::size_t b;
  std::size_t h_bc;
  std::size_t h_bc_harmonic;
  std::size_t h_ae;
  std::size_t h_ae_harmonic;
  int delta_s;
};

struct CohomologyReport {
  int dim;
  Rational lambda;
  std::vector<DegreeCohomology> degrees;
  std::size_t h_plus_J;
  std::size_t h_minus_J;
  std::size_t dim_ker_PJ;
  std::optional<std::size_t> b2_plus;
  std::optional<std::size_t> b2_minus;
  std::size_t dim_V;
  std::vector<bool> hlc;
  bool hlc_holds;
  bool pure_and_full;
  bool harmonic_j_split;
  bool harmonic_dR_in_bc;
  Subspace harmonic_dR2;
  Subspace harmonic_bc2;
  Subspace V;
};

/// Computes every quantity; throws InconsistencyError if the quotient and
/// harmonic routes disagree anywhere.
CohomologyReport build_report(const HodgeComplex& hc, const Rational& lambda = 1);

}  // namespace shl
