#ifndef WHITEALG_RATIONAL_HPP
#define WHITEALG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "whitealg/errors.hpp"

namespace whitealg {

// Exact arbitrary-precision rational coefficients, backed by GMP.
// All values passed around the library are canonicalized.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n) { return Rational(n); }

inline Rational rat(long num, long den) {
    if (den == 0) fail(Errc::ZeroDenominator, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool rat_is_integer(const Rational& q) { return q.get_den() == 1; }

// "p" for integers, "p/q" otherwise.
inline std::string rat_to_string(const Rational& q) {
    return rat_is_integer(q) ? q.get_num().get_str() : q.get_str();
}

inline Rational rat_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) fail(Errc::MalformedJson, "bad rational literal '" + s + "'");
    if (q.get_den() == 0) fail(Errc::ZeroDenominator, "rational with zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace whitealg

#endif
