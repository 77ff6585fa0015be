#pragma once

#include <gmpxx.h>

#include <string>

namespace padicdpp {

// Exact arithmetic everywhere: measures, norms and all the closed-form
// integrals in this library are rationals whose denominators are powers of
// the prime, so nothing is ever rounded.
using Rational = mpq_class;
using Integer = mpz_class;

/// base^exp for non-negative exp.
Integer int_pow(long base, unsigned long exp);

/// q^e as an exact rational, e may be negative.
Rational q_pow(long q, long e);

/// Multiplicity of p in a (a != 0).
long p_valuation(const Integer& a, long p);

/// p-adic valuation of a non-zero rational whose denominator is a power
/// of p. Throws invalid_input if the denominator has another factor.
long p_valuation(const Rational& x, long p);

/// p-adic absolute value q^{-v(x)}; 0 for x = 0.
Rational p_norm(const Rational& x, long p);

/// p-adic fractional part: the unique t in [0,1) with p-power denominator
/// such that x - t is a p-adic integer.
Rational p_fractional_part(const Rational& x, long p);

/// "n/d" (or just "n" when d = 1).
std::string rational_to_string(const Rational& x);

/// Parses "n/d" or "n"; throws invalid_input on garbage.
Rational rational_from_string(const std::string& s);

}  // namespace padicdpp
