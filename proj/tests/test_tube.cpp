#include <doctest.h>

#include "jorder/errors.hpp"
#include "jorder/tube.hpp"

using namespace jorder;

namespace {

const RingDescriptor Q = RingDescriptor::q();

AlgebraElem sym2(long a11, long a12, long a22) {
    auto d = AlgebraDescriptor::sym(2, Q);
    return AlgebraElem(d, {RingElem(Q, {rat(a11)}), RingElem(Q, {rat(a12)}),
                           RingElem(Q, {rat(a22)})});
}

} // namespace

TEST_CASE("tube membership") {
    auto d = AlgebraDescriptor::sym(2, Q);
    AlgebraElem e = AlgebraElem::unit(d), zero = AlgebraElem::zero(d);
    CHECK(tube_contains({zero, e}));
    CHECK_FALSE(tube_contains({e, zero}));
    CHECK(tube_contains({sym2(0, 1, 0), e}));
}

TEST_CASE("inversion in the complexified algebra") {
    auto d = AlgebraDescriptor::sym(2, Q);
    AlgebraElem e = AlgebraElem::unit(d), zero = AlgebraElem::zero(d);

    // (i e)^{-1} = -i e
    ComplexJElem ie{zero, e};
    ComplexJElem inv = complex_inverse(ie);
    CHECK(inv.re == zero);
    CHECK(inv.im == jneg(e));

    // ([[0,1],[1,0]] + i I)^{-1} exists; verify by multiplying back in the
    // complexified matrix algebra
    ComplexJElem z{sym2(0, 1, 0), e};
    ComplexJElem w = complex_inverse(z);
    AlgebraElem packed_z = complex_join(z.re, z.im);
    AlgebraElem packed_w = complex_join(w.re, w.im);
    RingMatrix prod = packed_z.sym_matrix() * packed_w.sym_matrix();
    CHECK(prod == RingMatrix::identity(packed_z.descriptor().ring(), 2));

    // eps * e has no inverse over the tangent algebra
    auto td = dual_extension(AlgebraDescriptor::scalar(Q));
    AlgebraElem eps(td, {RingElem(RingDescriptor::dual_q(), {rat(0), rat(1)})});
    CHECK_THROWS_AS(complex_inverse({eps, AlgebraElem::zero(td)}), NotInvertible);
}

TEST_CASE("negated inversion is an involution on sampled tube points") {
    auto d = AlgebraDescriptor::sym(2, Q);
    Rng rng(5);
    for (int k = 0; k < 30; ++k) {
        AlgebraElem x = sample_elem(rng, d, 5);
        AlgebraElem y = sample_cone_elem(rng, d, 5);
        ComplexJElem z{x, y};
        auto w = try_complex_inverse(z);
        REQUIRE(w.has_value());
        ComplexJElem minus{jneg(w->re), jneg(w->im)};
        auto back = try_complex_inverse(minus);
        REQUIRE(back.has_value());
        CHECK(jneg(back->re) == z.re);
        CHECK(jneg(back->im) == z.im);
    }
}

TEST_CASE("tube experiment: asserted for rational matrix instances") {
    for (auto d : {AlgebraDescriptor::scalar(Q), AlgebraDescriptor::sym(2, Q),
                   AlgebraDescriptor::sym(3, Q)}) {
        auto rep = tube_experiment(d, SampleSpec{11, 80, 5});
        INFO(rep.to_text());
        CHECK(rep.all_pass());
        CHECK(rep.find("tube-points-invertible")->asserted);
    }
}

TEST_CASE("tube experiment: exploratory elsewhere") {
    auto spin = tube_experiment(AlgebraDescriptor::spin(3, Q), SampleSpec{11, 60, 5});
    INFO(spin.to_text());
    CHECK_FALSE(spin.find("tube-points-invertible")->asserted);
    CHECK(spin.all_pass()); // no asserted checks, and no anomalies recorded either

    auto dual = tube_experiment(dual_extension(AlgebraDescriptor::sym(2, Q)),
                                SampleSpec{11, 40, 4});
    INFO(dual.to_text());
    CHECK_FALSE(dual.find("neg-inverse-stays-in-tube")->asserted);
}

TEST_CASE("mismatched parts are rejected") {
    auto d = AlgebraDescriptor::sym(2, Q);
    CHECK_THROWS_AS(make_complex(AlgebraElem::zero(d),
                                 AlgebraElem::zero(AlgebraDescriptor::scalar(Q))),
                    DescriptorMismatch);
}
