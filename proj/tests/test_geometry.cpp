#include <doctest.h>

#include "jorder/cyclic.hpp"
#include "jorder/errors.hpp"
#include "jorder/geometry.hpp"

using namespace jorder;

namespace {

const RingDescriptor Q = RingDescriptor::q();
const AlgebraDescriptor SC = AlgebraDescriptor::scalar(Q);

RingElem q(long num, long den = 1) { return RingElem(Q, {rat(num, den)}); }

AlgebraElem scalar_elem(const AlgebraDescriptor& d, long num, long den = 1) {
    return AlgebraElem(d, {RingElem(d.ring(), {rat(num, den)})});
}

} // namespace

TEST_CASE("embedding round-trips through the chart") {
    for (auto alg : {SC, AlgebraDescriptor::sym(2, Q),
                     AlgebraDescriptor::product({SC, SC}), dual_extension(SC)}) {
        auto geo = GeometryDescriptor::for_algebra(alg);
        Rng rng(3);
        for (int k = 0; k < 40; ++k) {
            AlgebraElem v = sample_elem(rng, alg, 8);
            auto back = to_chart(embed(geo, v));
            REQUIRE(back.has_value());
            CHECK(*back == ChartPoint::finite(v));
        }
        CHECK(*to_chart(infinity_point(geo)) == ChartPoint::infinity(alg));
    }
}

TEST_CASE("rank-one inversion in homogeneous coordinates") {
    auto geo = GeometryDescriptor::for_algebra(AlgebraDescriptor::sym(1, Q));
    AlgebraElem two = AlgebraElem(geo.algebra(), {q(2)});
    HomPoint p = act(Generator::jinv(), embed(geo, two));
    auto c = to_chart(p);
    REQUIRE(c.has_value());
    CHECK(c->value() == AlgebraElem(geo.algebra(), {q(1, 2)}));
}

TEST_CASE("mixed product points report no chart form") {
    auto alg = AlgebraDescriptor::product({SC, SC});
    auto geo = GeometryDescriptor::for_algebra(alg);
    HomPoint mixed = HomPoint::product(
        geo, {infinity_point(geo.components()[0]),
              embed(geo.components()[1], AlgebraElem::zero(SC))});
    CHECK_FALSE(to_chart(mixed).has_value());
}

TEST_CASE("point equality through canonical forms") {
    auto geo = GeometryDescriptor::for_algebra(SC);
    CHECK(point_eq(HomPoint::proj_pair(geo, q(2), q(4)), HomPoint::proj_pair(geo, q(1), q(2))));
    CHECK_FALSE(point_eq(HomPoint::proj_pair(geo, q(1), q(0)),
                         HomPoint::proj_pair(geo, q(0), q(1))));

    auto lgeo = GeometryDescriptor::for_algebra(AlgebraDescriptor::sym(2, Q));
    Rng rng(7);
    for (int k = 0; k < 25; ++k) {
        HomPoint p = sample_hom_point(rng, lgeo, 5);
        // right-multiplying a frame by an invertible matrix fixes the point
        RingMatrix g(Q, 2, 2);
        do {
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) g.at(i, j) = q(rng.range(-4, 4));
        } while (g.rank_over_field() != 2);
        HomPoint moved = HomPoint::lag_frame(lgeo, p.frame() * g);
        CHECK(point_eq(p, moved));
    }
}

TEST_CASE("canonicalization is idempotent") {
    for (auto alg : {SC, AlgebraDescriptor::sym(2, Q), dual_extension(SC),
                     AlgebraDescriptor::product({SC, SC})}) {
        auto geo = GeometryDescriptor::for_algebra(alg);
        Rng rng(11);
        for (int k = 0; k < 30; ++k) {
            HomPoint p = sample_hom_point(rng, geo, 6);
            CHECK(point_eq(p, p.canonicalized()));
        }
    }
}

TEST_CASE("total action: base examples") {
    auto lgeo1 = GeometryDescriptor::for_algebra(AlgebraDescriptor::sym(1, Q));
    // translations fix infinity
    HomPoint inf1 = infinity_point(lgeo1);
    AlgebraElem three(lgeo1.algebra(), {q(3)});
    CHECK(point_eq(act(Generator::trans(three), inf1), inf1));

    // tilde translations fix the origin
    auto lgeo2 = GeometryDescriptor::for_algebra(AlgebraDescriptor::sym(2, Q));
    Rng rng(13);
    for (int k = 0; k < 20; ++k) {
        AlgebraElem w = sample_elem(rng, lgeo2.algebra(), 6);
        CHECK(point_eq(act(Generator::tilde_trans(w), origin_point(lgeo2)),
                       origin_point(lgeo2)));
    }

    // j . j = id on sampled points
    for (auto alg : {SC, AlgebraDescriptor::sym(2, Q), dual_extension(SC)}) {
        auto geo = GeometryDescriptor::for_algebra(alg);
        Rng rng2(17);
        GroupWord jj{{Generator::jinv(), Generator::jinv()}};
        for (int k = 0; k < 25; ++k) {
            HomPoint p = sample_hom_point(rng2, geo, 6);
            CHECK(point_eq(act(jj, p), p));
        }
    }
}

TEST_CASE("actions respect composition and frames stay isotropic") {
    auto geo = GeometryDescriptor::for_algebra(AlgebraDescriptor::sym(2, Q));
    Rng rng(19);
    for (int k = 0; k < 25; ++k) {
        HomPoint p = sample_hom_point(rng, geo, 5);
        GroupWord w1 = sample_word(rng, geo.algebra(), 5, 4);
        GroupWord w2 = sample_word(rng, geo.algebra(), 5, 4);
        CHECK(point_eq(act(w1.then(w2), p), act(w2, act(w1, p))));

        HomPoint moved = act(w1, p);
        const RingMatrix& f = moved.frame();
        RingMatrix x(Q, 2, 2), y(Q, 2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                x.at(i, j) = f.at(i, j);
                y.at(i, j) = f.at(2 + i, j);
            }
        RingMatrix sym = x.transposed() * y;
        CHECK(sym == sym.transposed());
    }
}

TEST_CASE("transversality in the full model") {
    auto geo = GeometryDescriptor::for_algebra(AlgebraDescriptor::sym(2, Q));
    CHECK(transversal(origin_point(geo), infinity_point(geo)));

    AlgebraElem d11(geo.algebra(), {q(1), q(0), q(1)});
    AlgebraElem d12(geo.algebra(), {q(1), q(0), q(2)});
    CHECK_FALSE(transversal(embed(geo, d11), embed(geo, d12)));
    CHECK(transversal(embed(geo, d11), infinity_point(geo)));

    auto dgeo = GeometryDescriptor::for_algebra(dual_extension(SC));
    auto dd = dual_extension(SC);
    AlgebraElem eps(dd, {RingElem(RingDescriptor::dual_q(), {rat(0), rat(1)})});
    CHECK_FALSE(transversal(embed(dgeo, AlgebraElem::zero(dd)), embed(dgeo, eps)));
}

TEST_CASE("carry_to_frame normalizes transversal pairs") {
    // identity on the base pair
    auto geo = GeometryDescriptor::for_algebra(SC);
    GroupWord w = carry_to_frame(origin_point(geo), infinity_point(geo));
    CHECK(w.gens.empty());

    // finite-finite pair on the projective line
    HomPoint a = embed(geo, scalar_elem(SC, 1));
    HomPoint b = embed(geo, scalar_elem(SC, -1));
    GroupWord u = carry_to_frame(a, b);
    CHECK(point_eq(act(u, a), origin_point(geo)));
    CHECK(point_eq(act(u, b), infinity_point(geo)));
    CHECK(u.parity() == 0);

    // swapped base pair in the rank-one Lagrangian model
    auto lgeo = GeometryDescriptor::for_algebra(AlgebraDescriptor::sym(1, Q));
    GroupWord s = carry_to_frame(infinity_point(lgeo), origin_point(lgeo));
    CHECK(point_eq(act(s, infinity_point(lgeo)), origin_point(lgeo)));
    CHECK(point_eq(act(s, origin_point(lgeo)), infinity_point(lgeo)));
    CHECK(s.parity() == 0);

    CHECK_THROWS_AS(carry_to_frame(origin_point(geo), origin_point(geo)), NotTransversal);
}

TEST_CASE("carry_to_frame handles sampled pairs including points at infinity") {
    for (auto alg : {SC, AlgebraDescriptor::sym(2, Q), dual_extension(SC),
                     AlgebraDescriptor::product({SC, SC})}) {
        auto geo = GeometryDescriptor::for_algebra(alg);
        Rng rng(23);
        int done = 0;
        while (done < 25) {
            HomPoint a = sample_hom_point(rng, geo, 5);
            HomPoint b = sample_hom_point(rng, geo, 5);
            if (!transversal(a, b)) continue;
            ++done;
            GroupWord w = carry_to_frame(a, b); // self-checking
            CHECK(w.parity() == 0);
        }
    }
}

TEST_CASE("full cyclic relation on base examples") {
    auto geo = GeometryDescriptor::for_algebra(AlgebraDescriptor::sym(2, Q));
    CHECK(cyclically_ordered(origin_point(geo),
                             embed(geo, AlgebraElem::unit(geo.algebra())),
                             infinity_point(geo)));

    // product geometry: second component needs membership in ]inf,0[ = -cone
    auto alg = AlgebraDescriptor::product({SC, SC});
    auto pgeo = GeometryDescriptor::for_algebra(alg);
    auto pt = [&](const HomPoint& first, const HomPoint& second) {
        return HomPoint::product(pgeo, {first, second});
    };
    const auto& g0 = pgeo.components()[0];
    const auto& g1 = pgeo.components()[1];
    HomPoint a = pt(embed(g0, AlgebraElem::zero(SC)), infinity_point(g1));
    HomPoint b = pt(infinity_point(g0), embed(g1, AlgebraElem::zero(SC)));
    HomPoint x_bad = pt(embed(g0, scalar_elem(SC, 1)), embed(g1, scalar_elem(SC, 1)));
    HomPoint x_good = pt(embed(g0, scalar_elem(SC, 1)), embed(g1, scalar_elem(SC, -1)));
    CHECK_FALSE(cyclically_ordered(a, x_bad, b));
    CHECK(cyclically_ordered(a, x_good, b));
}

TEST_CASE("chart and full evaluators agree") {
    for (auto alg : {SC, dual_extension(SC), AlgebraDescriptor::sym(1, Q),
                     AlgebraDescriptor::sym(2, Q), AlgebraDescriptor::product({SC, SC})}) {
        auto geo = GeometryDescriptor::for_algebra(alg);
        Rng rng(29);
        for (int k = 0; k < 60; ++k) {
            ChartTriple t = sample_transversal_triple(rng, alg, 5);
            bool chart = cyclically_ordered(t.a, t.x, t.b);
            bool full = cyclically_ordered(embed(geo, t.a), embed(geo, t.x), embed(geo, t.b));
            CHECK(chart == full);
        }
    }
}

TEST_CASE("full relation is invariant under parity-0 words without partiality") {
    for (auto alg : {SC, AlgebraDescriptor::sym(2, Q)}) {
        auto geo = GeometryDescriptor::for_algebra(alg);
        Rng rng(31);
        for (int k = 0; k < 30; ++k) {
            ChartTriple t = sample_transversal_triple(rng, alg, 5);
            GroupWord w = sample_word(rng, alg, 5);
            if (w.parity() == 1) w.gens.push_back(Generator::neg());
            HomPoint a = act(w, embed(geo, t.a));
            HomPoint x = act(w, embed(geo, t.x));
            HomPoint b = act(w, embed(geo, t.b));
            CHECK(cyclically_ordered(embed(geo, t.a), embed(geo, t.x), embed(geo, t.b)) ==
                  cyclically_ordered(a, x, b));
        }
    }
}

TEST_CASE("unsupported geometries are rejected") {
    CHECK_THROWS_AS(GeometryDescriptor::for_algebra(AlgebraDescriptor::spin(3, Q)), Error);
    CHECK_THROWS_AS(
        GeometryDescriptor::for_algebra(dual_extension(AlgebraDescriptor::sym(2, Q))), Error);
}
