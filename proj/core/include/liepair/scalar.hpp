#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace liepair {

/// Exact rational scalar. GMP keeps mpq values canonical (reduced, positive
/// denominator) after every arithmetic operation, so equality is syntactic.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "p/q", "p" or a decimal-free integer string into a canonical
/// rational. Throws ParseError on malformed input or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_scalar(const Scalar& value);

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Scalar factorial(unsigned k);
Scalar binomial(unsigned n, unsigned k);

}  // namespace liepair
