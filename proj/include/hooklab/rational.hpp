#pragma once

#include <gmpxx.h>

#include <string>

namespace hooklab {

/// Exact rational number, always kept in lowest terms by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer factorial(int n)
{
    Integer f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

} // namespace hooklab
