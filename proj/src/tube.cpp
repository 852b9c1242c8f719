#include "jorder/tube.hpp"

#include "jorder/errors.hpp"

namespace jorder {

ComplexJElem make_complex(AlgebraElem re, AlgebraElem im) {
    if (re.descriptor() != im.descriptor())
        throw DescriptorMismatch("complex element parts over different algebras");
    return ComplexJElem{std::move(re), std::move(im)};
}

bool tube_contains(const ComplexJElem& z) {
    return cone_contains(z.im);
}

std::optional<ComplexJElem> try_complex_inverse(const ComplexJElem& z) {
    AlgebraElem packed = complex_join(z.re, z.im);
    auto inv = try_jordan_inverse(packed);
    if (!inv) return std::nullopt;
    return ComplexJElem{complex_re(*inv), complex_im(*inv)};
}

ComplexJElem complex_inverse(const ComplexJElem& z) {
    auto w = try_complex_inverse(z);
    if (!w) throw NotInvertible("tube element not invertible: " + z.str());
    return *w;
}

namespace {

bool rational_matrix_leaves_only(const AlgebraDescriptor& d) {
    for (const auto& [leaf, off] : d.leaves()) {
        if (leaf.ring() != RingDescriptor::q()) return false;
        if (leaf.kind() == AlgKind::Spin) return false;
    }
    return true;
}

} // namespace

AxiomReport tube_experiment(const AlgebraDescriptor& d, const SampleSpec& spec) {
    if (!is_ordered(d.ring())) throw NoOrder("tube experiment needs an ordered instance");

    bool asserted = rational_matrix_leaves_only(d);

    AxiomReport report;
    report.suite = "tube-domain";
    report.subject = d.name();
    report.spec = spec;

    auto& invertible = report.add("tube-points-invertible", asserted);
    auto& stays = report.add("neg-inverse-stays-in-tube", asserted);
    auto& involution = report.add("neg-inverse-involutive", asserted);

    Rng rng(spec.seed);
    for (long k = 0; k < spec.cases; ++k) {
        AlgebraElem x = sample_elem(rng, d, spec.bound);
        AlgebraElem y = k == 0 ? AlgebraElem::unit(d) : sample_cone_elem(rng, d, spec.bound);
        ComplexJElem z{x, y};

        invertible.cases++;
        auto w = try_complex_inverse(z);
        if (!w) {
            fail_check(invertible, "z=" + z.str());
            continue;
        }
        ComplexJElem neg_inv{jneg(w->re), jneg(w->im)};

        stays.cases++;
        if (!tube_contains(neg_inv)) {
            fail_check(stays, "z=" + z.str() + " -> " + neg_inv.str());
            continue;
        }

        involution.cases++;
        auto back = try_complex_inverse(neg_inv);
        if (!back || jneg(back->re) != z.re || jneg(back->im) != z.im)
            fail_check(involution, "z=" + z.str());
    }
    return report;
}

} // namespace jorder
