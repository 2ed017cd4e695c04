#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace graphlie {

/// Exact rational number. GMP keeps every value canonical: the denominator is
/// positive and coprime to the numerator.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error if den == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace graphlie
