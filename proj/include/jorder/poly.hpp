#pragma once

#include <vector>

#include "jorder/matrix.hpp"
#include "jorder/rational.hpp"

namespace jorder {

/// Dense univariate polynomial over Q; coefficient of x^i at index i, no
/// trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);

    static QPoly constant(const Rational& c) { return QPoly({c}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    Rational eval(const Rational& x) const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly negated() const;
    QPoly derivative() const;

    /// Euclidean remainder (divisor must be nonzero).
    QPoly rem(const QPoly& divisor) const;

    bool operator==(const QPoly& o) const { return c_ == o.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

QPoly poly_gcd(QPoly a, QPoly b);
QPoly squarefree_part(const QPoly& p);

/// Number of distinct real roots in the half-open interval (lo, hi],
/// counted by Sturm's theorem.
long sturm_count(const QPoly& p, const Rational& lo, const Rational& hi);

/// Characteristic polynomial det(xI - M) over Q (Faddeev-LeVerrier).
QPoly char_poly(const RingMatrix& m);

} // namespace jorder
