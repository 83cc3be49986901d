#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace shl {

/// Exact rational scalar. GMP keeps it canonical (reduced, positive denominator)
/// after every arithmetic operation.
using Rational = mpq_class;

using VectorQ = std::vector<Rational>;

/// Parses `p`, `-p`, `+p` or `p/q`. Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

bool is_zero(const VectorQ& v);

Rational dot(const VectorQ& a, const VectorQ& b);

}  // namespace shl
