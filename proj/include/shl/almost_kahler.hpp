#pragma once

#include "shl/graded_operator.hpp"
#include "shl/lie_model.hpp"
#include "shl/manifold_spec.hpp"
#include "shl/subspace.hpp"

#include <optional>
#include <utility>

namespace shl {

enum class StructureErrorKind {
  kShape,
  kMetricNotPositive,
  kNotClosed,
  kDegenerate,
  kJNotComplex,
  kOmegaNotJInvariant,
  kIncompatibleMetric,
  kNotUnimodular,
};

class StructureError : public std::runtime_error {
 public:
  StructureError(StructureErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  StructureErrorKind kind() const { return kind_; }

 private:
  StructureErrorKind kind_;
};

/// Compatible triple (ω, J, g) on a Lie model, with the metric machinery on
/// every degree precomputed. Immutable once built.
class AKStructure {
 public:
  const LieModel& model() const { return model_; }
  int dim() const { return model_.dim(); }
  /// Half the dimension.
  int n() const { return model_.half_dim(); }

  const Form& omega() const { return omega_; }
  /// Column j is J(e_j) in frame coordinates.
  const MatrixQ& J() const { return J_; }
  /// Gram matrix of the frame, g(e_i, e_j).
  const MatrixQ& metric() const { return metric_; }
  /// vol = ω^n / n!.
  const Form& volume() const { return volume_; }

  /// Induced inner product on Λ^k (minors of the inverse frame Gram).
  const MatrixQ& gram(int k) const { return at(gram_, k); }
  const MatrixQ& gram_inverse(int k) const { return at(gram_inv_, k); }
  /// Λ^k → Λ^{dim-k}, defined by α ∧ ∗β = ⟨α, β⟩ vol.
  const MatrixQ& star(int k) const { return at(star_, k); }
  /// Inverse of star(k), mapping Λ^{dim-k} → Λ^k.
  const MatrixQ& star_inverse(int k) const { return at(star_inv_, k); }
  /// Pullback α ↦ α(J·, …, J·) on Λ^k.
  const MatrixQ& j_action(int k) const { return at(j_action_, k); }

  const GradedOperator& L() const { return L_; }
  const GradedOperator& Lambda() const { return Lambda_; }

  Rational inner(const Form& a, const Form& b) const;

 private:
  friend AKStructure build_structure(const LieModel&, const Form&, const std::optional<MatrixQ>&, const MatrixQ&);

  static const MatrixQ& at(const std::vector<MatrixQ>& v, int k) {
    if (k < 0 || static_cast<std::size_t>(k) >= v.size()) throw DegreeError("AKStructure: degree out of range");
    return v[static_cast<std::size_t>(k)];
  }

  LieModel model_;
  Form omega_;
  MatrixQ J_;
  MatrixQ metric_;
  Form volume_;
  std::vector<MatrixQ> gram_, gram_inv_, star_, star_inv_, j_action_;
  GradedOperator L_, Lambda_;
};

/// Validates and assembles the structure. When J is omitted it is derived as
/// Ω⁻¹G, where Ω[i][j] = ω(e_i, e_j), so that g(u, v) = ω(u, Jv).
/// Throws StructureError with a distinct kind per failed condition.
AKStructure build_structure(const LieModel& model, const Form& omega, const std::optional<MatrixQ>& J,
                            const MatrixQ& metric);
AKStructure build_structure(const ManifoldSpec& spec);

/// Antisymmetric matrix Ω[i][j] = ω(e_i, e_j).
MatrixQ two_form_matrix(const Form& omega);

const MatrixQ& hodge_star(const AKStructure& ak, int k);

struct LefschetzMaps {
  GradedOperator L;
  GradedOperator Lambda;
};
LefschetzMaps lefschetz_maps(const AKStructure& ak);

/// P^k = ker Λ on Λ^k (zero for k > n).
Subspace primitive_subspace(const AKStructure& ak, int k);

struct LefschetzComponent {
  int r;
  Form primitive;  // degree k - 2r
};

/// a = Σ_r L^r p_r with p_r primitive; zero components are omitted.
std::vector<LefschetzComponent> lefschetz_decomposition(const AKStructure& ak, const Form& a);

struct TwoFormSplit {
  MatrixQ involution;  // α ↦ α(J·, J·) on Λ²
  Subspace plus_J;
  Subspace minus_J;
  std::optional<Subspace> plus_g;  // dimension 4 only
  std::optional<Subspace> minus_g;
};

TwoFormSplit j_split_2forms(const AKStructure& ak);

/// ±1 eigenspaces of ∗ on Λ²; throws DimensionError unless dim = 4.
std::pair<Subspace, Subspace> sd_asd_split(const AKStructure& ak);

}  // namespace shl
