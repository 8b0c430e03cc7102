#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace poslab {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Accepts "p", "p/q", with optional sign. Throws Error(ErrorCode::Parse).
Rational parse_rational(std::string_view text);

// Canonical form: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

// Decimal rendering rounded half away from zero; computed from the exact value.
std::string round_half_away(const Rational& value, int places);

// Exact t^e for rational e when the result is rational; returns false otherwise.
bool rational_power(const Rational& base, const Rational& exponent, Rational& out);

Rational pow_int(const Rational& base, unsigned exponent);

}  // namespace poslab
