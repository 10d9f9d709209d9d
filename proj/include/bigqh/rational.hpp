#ifndef BIGQH_RATIONAL_HPP
#define BIGQH_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bigqh
{

// Exact rationals are GMP's mpq_class. Every arithmetic result produced by
// mpq_class is already canonical (lowest terms, positive denominator); values
// built from a numerator/denominator pair must go through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Accepts "n", "-n", "n/d" (optional surrounding whitespace). Throws
// std::invalid_argument on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational &r);

inline bool is_integer(const Rational &r)
{
    return r.get_den() == 1;
}

} // namespace bigqh

#endif
