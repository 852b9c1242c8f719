#include <doctest.h>

#include "jorder/errors.hpp"
#include "jorder/jordan.hpp"

using namespace jorder;

namespace {

const RingDescriptor Q = RingDescriptor::q();

AlgebraElem sym2(long a11, long a12, long a22) {
    auto d = AlgebraDescriptor::sym(2, Q);
    return AlgebraElem(d, {RingElem(Q, {rat(a11)}), RingElem(Q, {rat(a12)}),
                           RingElem(Q, {rat(a22)})});
}

AlgebraElem scalar_q(long num, long den = 1) {
    return AlgebraElem(AlgebraDescriptor::scalar(Q), {RingElem(Q, {rat(num, den)})});
}

// independent oracle: plain 2x2 rational matrix product
RingMatrix mat2(long a, long b, long c, long d) {
    RingMatrix m(Q, 2, 2);
    m.at(0, 0) = RingElem(Q, {rat(a)});
    m.at(0, 1) = RingElem(Q, {rat(b)});
    m.at(1, 0) = RingElem(Q, {rat(c)});
    m.at(1, 1) = RingElem(Q, {rat(d)});
    return m;
}

} // namespace

TEST_CASE("positive definite matrices whose Jordan product leaves the cone") {
    AlgebraElem a = sym2(2, 1, 1);
    AlgebraElem b = sym2(1, 0, 9);
    CHECK(cone_contains(a));
    CHECK(cone_contains(b));
    AlgebraElem ab = bullet(a, b);
    CHECK(ab == sym2(2, 5, 9)); // (AB+BA)/2
    AlgebraElem anticom = jscale(ab, 2);
    CHECK(anticom == sym2(4, 10, 18));
    CHECK(anticom.sym_matrix().det() == RingElem(Q, {rat(-28)}));
    CHECK_FALSE(cone_contains(ab));
    CHECK_FALSE(cone_contains(anticom));
}

TEST_CASE("unit law on samples") {
    for (auto d : {AlgebraDescriptor::sym(3, Q), AlgebraDescriptor::spin(3, Q),
                   AlgebraDescriptor::product(
                       {AlgebraDescriptor::scalar(Q), AlgebraDescriptor::sym(2, Q)})}) {
        Rng rng(7);
        AlgebraElem e = AlgebraElem::unit(d);
        for (int k = 0; k < 40; ++k) {
            AlgebraElem a = sample_elem(rng, d, 8);
            CHECK(bullet(e, a) == a);
        }
    }
}

TEST_CASE("spin factor product") {
    auto d = AlgebraDescriptor::spin(2, Q);
    AlgebraElem a(d, {RingElem(Q, {rat(2)}), RingElem(Q, {rat(1)}), RingElem(Q, {rat(0)})});
    AlgebraElem sq = bullet(a, a);
    AlgebraElem expect(d, {RingElem(Q, {rat(5)}), RingElem(Q, {rat(4)}), RingElem(Q, {rat(0)})});
    CHECK(sq == expect);
}

TEST_CASE("quadratic operator") {
    // identity at the unit
    auto d = AlgebraDescriptor::sym(2, Q);
    CHECK(quad_op(AlgebraElem::unit(d)) == LinOp::identity(d));

    // rank one: Q_3(5) = 9 * 5
    CHECK(quad(scalar_q(3), scalar_q(5)) == scalar_q(45));

    // Q_A(I) = A * I * A = A^2, against the plain matrix-product oracle
    AlgebraElem a = sym2(2, 1, 1);
    RingMatrix a2 = mat2(2, 1, 1, 1) * mat2(2, 1, 1, 1);
    CHECK(quad(a, AlgebraElem::unit(d)) == AlgebraElem::from_sym_matrix(d, a2));
    CHECK(quad(a, AlgebraElem::unit(d)) == sym2(5, 3, 2));
}

TEST_CASE("linearized operator") {
    auto sc = AlgebraDescriptor::scalar(Q);
    // scalar: D_{a,x}(b) = 2abx, via polarization and via the direct formula
    AlgebraElem a = scalar_q(2), x = scalar_q(3), b = scalar_q(5);
    AlgebraElem via_op = dop(a, x).apply(b);
    CHECK(via_op == scalar_q(60));
    AlgebraElem direct = jsub(jadd(bullet(a, bullet(b, x)), bullet(b, bullet(a, x))),
                              bullet(bullet(a, b), x));
    CHECK(jscale(direct, 2) == via_op);

    auto d = AlgebraDescriptor::sym(2, Q);
    Rng rng(9);
    for (int k = 0; k < 30; ++k) {
        AlgebraElem u = sample_elem(rng, d, 6);
        AlgebraElem v = sample_elem(rng, d, 6);
        AlgebraElem w = sample_elem(rng, d, 6);
        // D_{e,e}(b) = 2b
        CHECK(dop(AlgebraElem::unit(d), AlgebraElem::unit(d)).apply(w) == jscale(w, 2));
        // D_{0,x} = 0
        CHECK(dop(AlgebraElem::zero(d), v).apply(w) == AlgebraElem::zero(d));
        // operator matrix agrees with 2(a(bx) + b(ax) - (ab)x)
        AlgebraElem lhs = dop(u, v).apply(w);
        AlgebraElem rhs = jscale(jsub(jadd(bullet(u, bullet(w, v)), bullet(w, bullet(u, v))),
                                      bullet(bullet(u, w), v)),
                                 2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("jordan inverse") {
    auto d = AlgebraDescriptor::sym(2, Q);
    CHECK(jordan_inverse(AlgebraElem::unit(d)) == AlgebraElem::unit(d));

    AlgebraElem a = sym2(2, 1, 1);
    AlgebraElem inv = jordan_inverse(a);
    CHECK(inv == sym2(1, -1, 2));
    CHECK(a.sym_matrix() * inv.sym_matrix() == RingMatrix::identity(Q, 2));

    // degenerate spin element: lambda^2 - q(w) = 0
    auto sp = AlgebraDescriptor::spin(2, Q);
    AlgebraElem deg(sp, {RingElem(Q, {rat(1)}), RingElem(Q, {rat(1)}), RingElem(Q, {rat(0)})});
    CHECK_FALSE(jis_invertible(deg));
    CHECK_THROWS_AS(jordan_inverse(deg), NotInvertible);
    // rank oracle: the Q_a block is singular over Q
    LinOp qdeg = quad_op(deg);
    CHECK(qdeg.blocks()[0].rank_over_field() < 3);

    CHECK_THROWS_AS(jordan_inverse(AlgebraElem::zero(d)), NotInvertible);
}

TEST_CASE("inverse is an involution and the fast invertibility test agrees with Q_a") {
    for (auto d : {AlgebraDescriptor::sym(2, Q), AlgebraDescriptor::spin(3, Q),
                   dual_extension(AlgebraDescriptor::sym(2, Q))}) {
        Rng rng(13);
        for (int k = 0; k < 40; ++k) {
            AlgebraElem a = sample_elem(rng, d, 6);
            CHECK(jis_invertible(a) == quad_op(a).is_invertible());
            auto solved = jordan_inverse_via_quad_solve(a);
            CHECK(solved.has_value() == jis_invertible(a));
            if (!jis_invertible(a)) continue;
            AlgebraElem inv = jordan_inverse(a);
            CHECK(inv == *solved); // shape formula vs operator solve
            CHECK(jordan_inverse(inv) == a);
        }
    }
}

TEST_CASE("cone membership") {
    auto d = AlgebraDescriptor::sym(2, Q);
    CHECK(cone_contains(AlgebraElem::unit(d)));
    CHECK_FALSE(cone_contains(sym2(4, 10, 18)));

    auto sp = AlgebraDescriptor::spin(2, Q);
    AlgebraElem v(sp, {RingElem(Q, {rat(2)}), RingElem(Q, {rat(1)}), RingElem(Q, {rat(0)})});
    CHECK(cone_contains(v)); // 4 - 1 = 3 > 0

    // tangent algebra: cone reads the base part only
    auto td = dual_extension(d);
    Rng rng(19);
    for (int k = 0; k < 30; ++k) {
        AlgebraElem base = sample_cone_elem(rng, d, 5);
        AlgebraElem fiber = sample_elem(rng, d, 5);
        CHECK(cone_contains(dual_join(base, fiber)));
        AlgebraElem off = sample_elem(rng, d, 5);
        CHECK(cone_contains(dual_join(base, off)) == cone_contains(base));
    }

    CHECK_THROWS_AS(cone_contains(AlgebraElem::unit(
                        AlgebraDescriptor::scalar(RingDescriptor::gauss_q()))),
                    NoOrder);
}

TEST_CASE("point symmetry") {
    CHECK(point_symmetry(scalar_q(2), scalar_q(1)) == scalar_q(4));
    auto d = AlgebraDescriptor::sym(2, Q);
    Rng rng(29);
    AlgebraElem e = AlgebraElem::unit(d);
    for (int k = 0; k < 30; ++k) {
        AlgebraElem x = sample_invertible(rng, d, 6);
        AlgebraElem y = sample_invertible(rng, d, 6);
        CHECK(point_symmetry(x, x) == x);
        CHECK(point_symmetry(e, y) == jordan_inverse(y));
        // s_x is an involution on invertibles
        CHECK(point_symmetry(x, point_symmetry(x, y)) == y);
        // s_x s_y s_x = s_{s_x(y)}
        AlgebraElem z = sample_invertible(rng, d, 6);
        AlgebraElem lhs = point_symmetry(x, point_symmetry(y, point_symmetry(x, z)));
        AlgebraElem rhs = point_symmetry(point_symmetry(x, y), z);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("fundamental formula in rank one") {
    // Q_{Q_2(3)} = Q_12 = 144 = Q_2 Q_3 Q_2
    AlgebraElem two = scalar_q(2), three = scalar_q(3);
    AlgebraElem q23 = quad(two, three);
    CHECK(q23 == scalar_q(12));
    CHECK(quad(q23, scalar_q(1)) == scalar_q(144));
}

TEST_CASE("axiom suites pass on the implemented instances") {
    SampleSpec spec{7, 60, 5};
    for (auto d : {AlgebraDescriptor::sym(3, Q), AlgebraDescriptor::spin(3, Q),
                   dual_extension(AlgebraDescriptor::scalar(Q)),
                   dual_extension(AlgebraDescriptor::sym(2, Q)),
                   AlgebraDescriptor::product(
                       {AlgebraDescriptor::scalar(Q), AlgebraDescriptor::scalar(Q)})}) {
        auto jrep = check_jordan_axioms(d, spec);
        INFO(jrep.to_text());
        CHECK(jrep.all_pass());
        auto orep = check_ordered_algebra_axioms(d, spec);
        INFO(orep.to_text());
        CHECK(orep.all_pass());
        auto frep = check_formal_reality(d, spec);
        INFO(frep.to_text());
        CHECK(frep.all_pass());
    }
}

TEST_CASE("quadratic operators preserve the cone in both directions") {
    auto d = AlgebraDescriptor::sym(2, Q);
    Rng rng(37);
    for (int k = 0; k < 40; ++k) {
        AlgebraElem b = sample_invertible(rng, d, 5);
        AlgebraElem p = sample_cone_elem(rng, d, 5);
        CHECK(cone_contains(quad(b, p)));
        CHECK(cone_contains(quad(jordan_inverse(b), p)));
    }
}

TEST_CASE("descriptor plumbing") {
    auto d = AlgebraDescriptor::product(
        {AlgebraDescriptor::scalar(Q), AlgebraDescriptor::sym(2, Q)});
    CHECK(d.dim() == 4);
    CHECK(d.leaves().size() == 2);
    CHECK(d.ring().kind() == RingKind::Product);
    CHECK(dual_extension(d).ring().factors()[0] == RingDescriptor::dual_q());
    CHECK_THROWS_AS(AlgebraDescriptor::sym(2, RingDescriptor::z_int()), Error);
    CHECK_THROWS_AS(AlgebraDescriptor::sym(9, Q), Error);

    // the eps-extension identifies the tangent algebra with the same shape
    // over the extended ring
    auto td = dual_extension(AlgebraDescriptor::sym(2, Q));
    CHECK(td == AlgebraDescriptor::sym(2, RingDescriptor::dual_q()));
    auto cd = complexification(AlgebraDescriptor::sym(2, Q));
    CHECK(cd == AlgebraDescriptor::sym(2, RingDescriptor::gauss_q()));
}
