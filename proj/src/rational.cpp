#include "shl/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace shl {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_zero(const VectorQ& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

Rational dot(const VectorQ& a, const VectorQ& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace shl
