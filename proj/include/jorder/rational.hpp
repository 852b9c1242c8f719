#pragma once

#include <gmpxx.h>

#include <string>

#include "jorder/errors.hpp"

namespace jorder {

using Int = mpz_class;

/// Exact rational scalar. Kept canonical (gcd(|num|,den)=1, den>0) at all
/// times; gmp arithmetic preserves canonical form, the helpers below
/// canonicalize on construction.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Int& num, const Int& den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p/q" or "p" (base 10, optional sign).
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw ConfigError("malformed rational '" + s + "'");
    if (r.get_den() == 0) throw ConfigError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

/// "p/q", or just "p" when the denominator is one.
inline std::string rational_str(const Rational& q) {
    return q.get_str();
}

inline int sign(const Rational& q) {
    return sgn(q);
}

inline bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

} // namespace jorder
