#pragma once

#include <string>

#include <gmpxx.h>

namespace qrank {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) { return v.get_str(); }

// Floor division for possibly negative numerators (C++ truncates toward zero).
constexpr long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

constexpr long ceil_div(long a, long b) { return -floor_div(-a, b); }

constexpr long mod_floor(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace qrank
