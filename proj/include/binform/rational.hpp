#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace binform {

using Integer = mpz_class;
using Rational = mpq_class;

inline double to_double(const Rational& q) { return q.get_d(); }

// Exact conversion; every finite double is a dyadic rational.
Rational from_double(double v);

// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& q);

// Accepts "p", "p/q" and finite decimal notation ("0.125", "-3.5").
Rational parse_rational(std::string_view text);

inline int sign_of(const Rational& q) { return sgn(q); }

Rational pow(const Rational& base, unsigned exponent);

// Nearest multiple of 2^-bits.
Rational round_dyadic(const Rational& q, unsigned bits);

// A rational r with r >= sqrt(q) and r <= sqrt(q) * (1 + 1e-12); q >= 0.
Rational sqrt_upper(const Rational& q);

}  // namespace binform
