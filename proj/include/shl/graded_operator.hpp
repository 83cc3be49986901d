#pragma once

#include "shl/exterior.hpp"

#include <vector>

namespace shl {

/// Linear map on Λ^•(R^dim)* of fixed degree shift, one block per source
/// degree k: Λ^k → Λ^{k+shift}. Blocks whose target degree is out of range
/// have zero rows.
class GradedOperator {
 public:
  GradedOperator() = default;
  GradedOperator(int dim, int shift);
  GradedOperator(int dim, int shift, std::vector<MatrixQ> blocks);

  int dim() const { return dim_; }
  int shift() const { return shift_; }
  const MatrixQ& block(int k) const;

  Form apply(const Form& f) const;
  bool is_zero() const;

  GradedOperator& operator+=(const GradedOperator& o);
  GradedOperator& operator-=(const GradedOperator& o);
  GradedOperator& operator*=(const Rational& s);
  friend GradedOperator operator+(GradedOperator a, const GradedOperator& b) { return a += b; }
  friend GradedOperator operator-(GradedOperator a, const GradedOperator& b) { return a -= b; }
  friend GradedOperator operator*(const Rational& s, GradedOperator a) { return a *= s; }
  /// Composition a ∘ b.
  friend GradedOperator operator*(const GradedOperator& a, const GradedOperator& b);
  friend bool operator==(const GradedOperator&, const GradedOperator&) = default;

 private:
  int dim_ = 0;
  int shift_ = 0;
  std::vector<MatrixQ> blocks_;
};

}  // namespace shl
