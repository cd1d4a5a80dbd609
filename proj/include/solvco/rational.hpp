#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace solvco {

/// Exact rational number. GMP keeps every result in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Column vector of rationals.
using Vector = std::vector<Rational>;

/// Parses `p`, `-p` or `p/q` (q > 0). Throws InputError on anything else.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

bool is_zero(const Vector& v);

}  // namespace solvco
