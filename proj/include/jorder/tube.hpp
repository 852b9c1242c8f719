#pragma once

#include "jorder/jordan.hpp"

namespace jorder {

/// Element z = re + i im of the complexified algebra V[i], kept as a pair
/// over the ordered base descriptor.
struct ComplexJElem {
    AlgebraElem re, im;

    std::string str() const { return re.str() + " + i*" + im.str(); }
};

ComplexJElem make_complex(AlgebraElem re, AlgebraElem im);

/// Membership in the tube V + i cone: the imaginary part lies in the cone.
bool tube_contains(const ComplexJElem& z);

/// Jordan inverse computed in V[i] through the same quadratic-operator
/// linear solve, post-verified.
std::optional<ComplexJElem> try_complex_inverse(const ComplexJElem& z);
ComplexJElem complex_inverse(const ComplexJElem& z); // throws NotInvertible

/// Samples z in the tube and tests that z is invertible in V[i] and that
/// -z^{-1} stays in the tube. Asserted for matrix instances over Q (where
/// a rational matrix argument settles it); exploratory elsewhere (spin
/// factors, eps-extensions) with anomalies recorded, not fatal.
AxiomReport tube_experiment(const AlgebraDescriptor& d, const SampleSpec& spec);

} // namespace jorder
