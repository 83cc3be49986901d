#include "shl/exterior.hpp"

#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <sstream>

namespace shl {

MultiIndex MultiIndex::from_indices(const std::vector<int>& indices) {
  std::uint32_t mask = 0;
  int previous = 0;
  for (int i : indices) {
    if (i <= previous || i > kMaxDimension)
      throw std::invalid_argument("MultiIndex: indices must be strictly increasing within 1..8");
    mask |= 1U << (i - 1);
    previous = i;
  }
  return MultiIndex(mask);
}

int MultiIndex::degree() const { return std::popcount(mask_); }

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if ((mask_ >> i) & 1U) out.push_back(i + 1);
  return out;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  auto ia = a.indices();
  auto ib = b.indices();
  return ia <=> ib;
}

int wedge_sign(MultiIndex a, MultiIndex b) {
  if (a.mask() & b.mask()) return 0;
  int inversions = 0;
  for (int j : b.indices()) inversions += std::popcount(a.mask() >> j);
  return inversions % 2 == 0 ? 1 : -1;
}

namespace {

void enumerate(int dim, int k, int next, std::uint32_t mask, std::vector<MultiIndex>& out) {
  if (k == 0) {
    out.emplace_back(mask);
    return;
  }
  for (int i = next; i <= dim - k + 1; ++i) enumerate(dim, k - 1, i + 1, mask | (1U << (i - 1)), out);
}

}  // namespace

std::vector<MultiIndex> enumerate_basis(int dim, int k) {
  if (dim < 0 || dim > kMaxDimension) throw std::out_of_range("enumerate_basis: dimension out of range");
  if (k < 0 || k > dim) throw std::out_of_range("enumerate_basis: degree out of range");
  std::vector<MultiIndex> out;
  enumerate(dim, k, 1, 0, out);
  return out;
}

std::size_t form_space_size(int dim, int k) {
  if (k < 0 || k > dim) return 0;
  std::size_t c = 1;
  for (int i = 0; i < k; ++i) c = c * static_cast<std::size_t>(dim - i) / static_cast<std::size_t>(i + 1);
  return c;
}

ExteriorBasis::ExteriorBasis(int dim) : dim_(dim), position_(std::size_t{1} << dim) {
  for (int k = 0; k <= dim; ++k) {
    bases_.push_back(enumerate_basis(dim, k));
    for (std::size_t i = 0; i < bases_.back().size(); ++i) position_[bases_.back()[i].mask()] = i;
  }
}

const ExteriorBasis& ExteriorBasis::get(int dim) {
  if (dim < 1 || dim > kMaxDimension) throw std::out_of_range("ExteriorBasis: dimension out of range");
  static std::array<std::unique_ptr<ExteriorBasis>, kMaxDimension + 1> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto& slot = cache[static_cast<std::size_t>(dim)];
  if (!slot) slot.reset(new ExteriorBasis(dim));
  return *slot;
}

std::size_t ExteriorBasis::size(int k) const { return form_space_size(dim_, k); }

Form::Form(int dim, int degree) : dim_(dim), degree_(degree) {
  if (degree < 0 || degree > dim) throw DegreeError("Form: degree out of range");
  coords_.resize(form_space_size(dim, degree));
}

Form::Form(int dim, int degree, VectorQ coords) : Form(dim, degree) {
  if (coords.size() != coords_.size()) throw DimensionError("Form: coordinate length mismatch");
  coords_ = std::move(coords);
}

Form Form::basis_element(int dim, MultiIndex index, const Rational& coefficient) {
  Form f(dim, index.degree());
  f.add_term(index, coefficient);
  return f;
}

Form Form::scalar(int dim, const Rational& value) { return Form(dim, 0, {value}); }

const Rational& Form::coefficient(MultiIndex index) const {
  if (index.degree() != degree_) throw DegreeError("Form::coefficient: degree mismatch");
  return coords_[ExteriorBasis::get(dim_).index_of(index)];
}

void Form::add_term(MultiIndex index, const Rational& coefficient) {
  if (index.degree() != degree_) throw DegreeError("Form::add_term: degree mismatch");
  if (index.mask() >> dim_) throw std::out_of_range("Form::add_term: index exceeds dimension");
  coords_[ExteriorBasis::get(dim_).index_of(index)] += coefficient;
}

Form& Form::operator+=(const Form& o) {
  if (o.dim_ != dim_ || o.degree_ != degree_) throw DegreeError("Form sum: dimension or degree mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (o.dim_ != dim_ || o.degree_ != degree_)
    throw DegreeError("Form difference: dimension or degree mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Form& Form::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Form wedge(const Form& a, const Form& b) {
  if (a.dim() != b.dim()) throw DimensionError("wedge: ambient dimension mismatch");
  if (a.degree() + b.degree() > a.dim()) throw DegreeError("wedge: degree overflow");
  const auto& basis = ExteriorBasis::get(a.dim());
  Form out(a.dim(), a.degree() + b.degree());
  const auto& ia = basis.basis(a.degree());
  const auto& ib = basis.basis(b.degree());
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (is_zero(a.coords()[i])) continue;
    for (std::size_t j = 0; j < ib.size(); ++j) {
      if (is_zero(b.coords()[j])) continue;
      int s = wedge_sign(ia[i], ib[j]);
      if (s == 0) continue;
      Rational term = a.coords()[i] * b.coords()[j];
      if (s < 0) term = -term;
      out.add_term(MultiIndex(ia[i].mask() | ib[j].mask()), term);
    }
  }
  return out;
}

MatrixQ wedge_matrix(const Form& a, int k) {
  if (k < 0 || k > a.dim()) throw DegreeError("wedge_matrix: source degree out of range");
  if (k + a.degree() > a.dim()) throw DegreeError("wedge_matrix: degree overflow");
  const auto& basis = ExteriorBasis::get(a.dim());
  const auto& source = basis.basis(k);
  MatrixQ m(basis.size(k + a.degree()), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    Form image = wedge(a, Form::basis_element(a.dim(), source[c]));
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = image.coords()[r];
  }
  return m;
}

MatrixQ exterior_power(const MatrixQ& a, int k) {
  if (!a.is_square()) throw DimensionError("exterior_power: matrix not square");
  const int dim = static_cast<int>(a.rows());
  if (k < 0 || k > dim) throw DegreeError("exterior_power: degree out of range");
  const auto& basis = ExteriorBasis::get(dim);
  std::vector<Form> images;
  for (int i = 0; i < dim; ++i) images.emplace_back(dim, 1, a.column(static_cast<std::size_t>(i)));
  const auto& source = basis.basis(k);
  MatrixQ m(source.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    Form image = Form::scalar(dim, 1);
    for (int i : source[c].indices()) image = wedge(image, images[static_cast<std::size_t>(i - 1)]);
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = image.coords()[r];
  }
  return m;
}

std::string to_string(MultiIndex m) {
  std::string s = "e";
  for (int i : m.indices()) s += std::to_string(i);
  return s;
}

std::string to_string(const Form& f) {
  if (f.degree() == 0) return to_string(f.coords()[0]);
  const auto& basis = ExteriorBasis::get(f.dim()).basis(f.degree());
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Rational& c = f.coords()[i];
    if (is_zero(c)) continue;
    Rational magnitude = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    if (magnitude != 1) os << to_string(magnitude) << ' ';
    os << to_string(basis[i]);
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace shl
