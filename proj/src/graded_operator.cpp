#include "shl/graded_operator.hpp"

namespace shl {

GradedOperator::GradedOperator(int dim, int shift) : dim_(dim), shift_(shift) {
  for (int k = 0; k <= dim; ++k) blocks_.emplace_back(form_space_size(dim, k + shift), form_space_size(dim, k));
}

GradedOperator::GradedOperator(int dim, int shift, std::vector<MatrixQ> blocks)
    : dim_(dim), shift_(shift), blocks_(std::move(blocks)) {
  if (blocks_.size() != static_cast<std::size_t>(dim + 1))
    throw DimensionError("GradedOperator: need one block per degree");
  for (int k = 0; k <= dim; ++k) {
    const MatrixQ& b = blocks_[static_cast<std::size_t>(k)];
    if (b.rows() != form_space_size(dim, k + shift) || b.cols() != form_space_size(dim, k))
      throw DimensionError("GradedOperator: block " + std::to_string(k) + " has the wrong shape");
  }
}

const MatrixQ& GradedOperator::block(int k) const {
  if (k < 0 || k > dim_) throw DegreeError("GradedOperator::block: degree out of range");
  return blocks_[static_cast<std::size_t>(k)];
}

Form GradedOperator::apply(const Form& f) const {
  if (f.dim() != dim_) throw DimensionError("GradedOperator::apply: dimension mismatch");
  const int target = f.degree() + shift_;
  if (target < 0 || target > dim_) throw DegreeError("GradedOperator::apply: target degree out of range");
  return Form(dim_, target, block(f.degree()).apply(f.coords()));
}

bool GradedOperator::is_zero() const {
  for (const auto& b : blocks_)
    if (!b.is_zero()) return false;
  return true;
}

GradedOperator& GradedOperator::operator+=(const GradedOperator& o) {
  if (o.dim_ != dim_ || o.shift_ != shift_) throw DimensionError("GradedOperator sum: shape mismatch");
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] += o.blocks_[k];
  return *this;
}

GradedOperator& GradedOperator::operator-=(const GradedOperator& o) {
  if (o.dim_ != dim_ || o.shift_ != shift_) throw DimensionError("GradedOperator difference: shape mismatch");
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] -= o.blocks_[k];
  return *this;
}

GradedOperator& GradedOperator::operator*=(const Rational& s) {
  for (auto& b : blocks_) b *= s;
  return *this;
}

GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) {
  if (a.dim_ != b.dim_) throw DimensionError("GradedOperator composition: dimension mismatch");
  GradedOperator c(a.dim_, a.shift_ + b.shift_);
  for (int k = 0; k <= a.dim_; ++k) {
    const int mid = k + b.shift_;
    if (mid < 0 || mid > a.dim_) continue;
    c.blocks_[static_cast<std::size_t>(k)] = a.block(mid) * b.block(k);
  }
  return c;
}

}  // namespace shl
