#pragma once

#include <gmpxx.h>

#include <string>

namespace symalg {

// GMP keeps mpq_class canonical: reduced, positive denominator, zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

// "a" or "a/b".
std::string to_string(const Rational& r);

// Accepts "a", "-a", "a/b" and terminating decimals like "-1.25".
Rational parse_rational(const std::string& s);

Rational rational_pow(const Rational& r, unsigned k);

}  // namespace symalg
