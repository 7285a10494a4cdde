#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hampack {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer pow_int(long base, unsigned exp)
{
    return boost::multiprecision::pow(Integer(base), exp);
}

inline Integer binomial(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    Integer b = 1;
    for (long i = 0; i < k; ++i)
        b = b * (n - i) / (i + 1);
    return b;
}

/// Largest integer not above r.
inline Integer floor_of(const Rational &r)
{
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    Integer q = num / den;
    if (num % den != 0 && num < 0)
        --q;
    return q;
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational &r)
{
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline std::string to_string(const Integer &i) { return i.str(); }

}  // namespace hampack
