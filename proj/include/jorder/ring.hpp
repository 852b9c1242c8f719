#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jorder/rational.hpp"
#include "jorder/report.hpp"
#include "jorder/sampler.hpp"

namespace jorder {

enum class RingKind {
    Q,            // rationals, usual total order
    DualQ,        // Q[eps], eps^2 = 0, ordered by the eps-free part
    GaussQ,       // Q[i], no order
    DualGaussQ,   // Q[eps][i], no order
    ZInt,         // integers; ordered, squares positive, but 2 has no inverse
    TrivialNOrder,// Q with x > 0 iff x is a positive integer (negative test)
    Product,      // direct product of ordered rings, componentwise order
};

/// Structural description of a base ring. Value type; equality is
/// structural.
class RingDescriptor {
public:
    static RingDescriptor q() { return RingDescriptor(RingKind::Q); }
    static RingDescriptor dual_q() { return RingDescriptor(RingKind::DualQ); }
    static RingDescriptor gauss_q() { return RingDescriptor(RingKind::GaussQ); }
    static RingDescriptor dual_gauss_q() { return RingDescriptor(RingKind::DualGaussQ); }
    static RingDescriptor z_int() { return RingDescriptor(RingKind::ZInt); }
    static RingDescriptor trivial_n_order() { return RingDescriptor(RingKind::TrivialNOrder); }
    static RingDescriptor product(std::vector<RingDescriptor> factors);

    RingKind kind() const { return kind_; }
    const std::vector<RingDescriptor>& factors() const { return factors_; }

    /// Number of rational coordinate slots of one element.
    std::size_t arity() const;

    /// The ring contains 1/2 (needed by Jordan products of matrix type).
    bool has_half() const;

    bool operator==(const RingDescriptor& o) const;
    bool operator!=(const RingDescriptor& o) const { return !(*this == o); }

    std::string name() const;

private:
    explicit RingDescriptor(RingKind k) : kind_(k) {}
    RingKind kind_;
    std::vector<RingDescriptor> factors_; // Product only
};

enum class OrderFlavor {
    SquareOrderedInversePor, // conditions (1)-(4) of a partially ordered ring
    Por,                     // (1),(2) only guaranteed
    Unordered,
};

OrderFlavor order_flavor(const RingDescriptor& d);

inline bool is_ordered(const RingDescriptor& d) {
    return order_flavor(d) != OrderFlavor::Unordered;
}

/// eps-extension A -> A[eps]. Defined for Q, GaussQ and products thereof.
RingDescriptor dual_extension(const RingDescriptor& d);

/// Complexification A -> A[i]. Defined for Q, DualQ and products thereof.
RingDescriptor complexification(const RingDescriptor& d);

/// One element of a concrete base ring: descriptor plus a flat coordinate
/// vector. Layouts: Q/ZInt/TrivialNOrder = (x); DualQ = (re, eps);
/// GaussQ = (re, im); DualGaussQ = (re, re_eps, im, im_eps);
/// Product = concatenation of the factors.
class RingElem {
public:
    RingElem(RingDescriptor desc, std::vector<Rational> coords);

    static RingElem zero(const RingDescriptor& d);
    static RingElem one(const RingDescriptor& d);
    /// Diagonal embedding of a rational (integral for ZInt).
    static RingElem from_rational(const RingDescriptor& d, const Rational& v);

    const RingDescriptor& descriptor() const { return desc_; }
    const std::vector<Rational>& coords() const { return c_; }
    Rational& coord(std::size_t i) { return c_[i]; }
    const Rational& coord(std::size_t i) const { return c_[i]; }

    bool is_zero() const;
    bool operator==(const RingElem& o) const;
    bool operator!=(const RingElem& o) const { return !(*this == o); }

    std::string str() const;

private:
    RingDescriptor desc_;
    std::vector<Rational> c_;
};

RingElem ring_add(const RingElem& a, const RingElem& b);
RingElem ring_sub(const RingElem& a, const RingElem& b);
RingElem ring_mul(const RingElem& a, const RingElem& b);
RingElem ring_neg(const RingElem& a);
RingElem ring_scale(const RingElem& a, const Rational& t); // t must embed in the ring

/// Strict positivity in the descriptor's cone. Throws NoOrder on unordered
/// rings.
bool ring_is_positive(const RingElem& a);

bool ring_is_unit(const RingElem& a);
std::optional<RingElem> ring_try_invert(const RingElem& a);
RingElem ring_invert(const RingElem& a); // throws NotInvertible

/// Projection killing eps (DualQ -> Q, DualGaussQ -> GaussQ, products
/// componentwise). Identity on eps-free rings.
RingElem eps_free_part(const RingElem& a);

// Deterministic samplers.
RingElem sample_ring_elem(Rng& rng, const RingDescriptor& d, long bound);
RingElem sample_ring_unit(Rng& rng, const RingDescriptor& d, long bound);

/// Checks the partially-ordered-ring conditions on sampled witnesses:
/// translation invariance, multiplicativity, 0 < 1, salience of the cone,
/// square-order (invertible squares positive) and inverse-por (positive
/// elements invertible). Deliberately defective rings report concrete
/// counterexamples.
AxiomReport check_ordered_ring_axioms(const RingDescriptor& d, const SampleSpec& spec);

} // namespace jorder
