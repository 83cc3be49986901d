#pragma once

#include "shl/exterior.hpp"

#include <optional>
#include <string>
#include <vector>

namespace shl {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModelDiagnostics {
  bool passed = true;
  /// Degree k and basis element e^I with d(d e^I) != 0, for the first failure.
  std::optional<int> failing_degree;
  std::optional<MultiIndex> failing_element;
  std::string message;
};

/// Runs the d² = 0 check on raw structure constants.
ModelDiagnostics check_complex(int dim, const std::vector<Form>& d_on_coframe);

/// Finite-dimensional Chevalley–Eilenberg model: the differential on the
/// coframe, extended to every degree as an antiderivation.
class LieModel {
 public:
  LieModel() = default;
  /// d_on_coframe[m] = d e^{m+1}, each of degree 2. Throws ModelError on an
  /// odd or out-of-range dimension, malformed constants, or d² != 0.
  LieModel(int dim, std::vector<Form> d_on_coframe);

  /// Model with d ≡ 0.
  static LieModel abelian(int dim);

  int dim() const { return dim_; }
  int half_dim() const { return dim_ / 2; }
  const std::vector<Form>& d_on_coframe() const { return d_on_coframe_; }

  /// Matrix of d from Λ^k to Λ^{k+1}; on top degree a 0-row matrix.
  const MatrixQ& differential(int k) const;

  /// d applied to a form of any degree.
  Form d(const Form& f) const;

  /// True when d vanishes on Λ^{dim-1} (the Lie algebra is unimodular).
  bool is_unimodular() const;

  friend bool operator==(const LieModel& a, const LieModel& b) {
    return a.dim_ == b.dim_ && a.d_on_coframe_ == b.d_on_coframe_;
  }

 private:
  int dim_ = 0;
  std::vector<Form> d_on_coframe_;
  std::vector<MatrixQ> d_;
};

/// Matrices of the antiderivation extension, without validating d² = 0.
std::vector<MatrixQ> differential_matrices(int dim, const std::vector<Form>& d_on_coframe);

MatrixQ differential_matrix(const LieModel& model, int k);

/// Recomputes d_{k+1} d_k for all k on an existing model.
ModelDiagnostics validate(const LieModel& model);

}  // namespace shl
