#include <doctest.h>

#include "jorder/affine.hpp"
#include "jorder/errors.hpp"
#include "jorder/geometry.hpp"

using namespace jorder;

namespace {

const RingDescriptor Q = RingDescriptor::q();
const AlgebraDescriptor SC = AlgebraDescriptor::scalar(Q);

ChartPoint fq(long num, long den = 1) {
    return ChartPoint::finite(AlgebraElem(SC, {RingElem(Q, {rat(num, den)})}));
}

AlgebraElem sq(long num, long den = 1) {
    return AlgebraElem(SC, {RingElem(Q, {rat(num, den)})});
}

} // namespace

TEST_CASE("classification of endpoint pairs") {
    CHECK(classify_pair(ChartPoint::origin(SC), ChartPoint::infinity(SC)) ==
          ImageClass::Parabolic);
    CHECK(classify_pair(ChartPoint::infinity(SC), fq(3)) == ImageClass::Parabolic);
    CHECK(classify_pair(fq(1), fq(-1)) == ImageClass::Hyperbolic);

    auto d = AlgebraDescriptor::sym(2, Q);
    AlgebraElem two_i = jscale(AlgebraElem::unit(d), rat(2));
    CHECK(classify_pair(ChartPoint::origin(d), ChartPoint::finite(two_i)) ==
          ImageClass::Elliptic);

    CHECK_THROWS_AS(classify_pair(fq(1), fq(1)), NotTransversal);
}

TEST_CASE("cone-path membership") {
    auto d = AlgebraDescriptor::sym(2, Q);
    AlgebraElem e = AlgebraElem::unit(d);
    CHECK(member_by_cones(ChartPoint::origin(d), ChartPoint::finite(jscale(e, 2)), e));
    CHECK_FALSE(member_by_cones(ChartPoint::origin(SC), ChartPoint::infinity(SC), sq(-1)));

    auto sp = AlgebraDescriptor::spin(2, Q);
    AlgebraElem b(sp, {RingElem(Q, {rat(4)}), RingElem(Q, {rat(0)}), RingElem(Q, {rat(0)})});
    AlgebraElem x(sp, {RingElem(Q, {rat(2)}), RingElem(Q, {rat(1)}), RingElem(Q, {rat(0)})});
    CHECK(member_by_cones(ChartPoint::origin(sp), ChartPoint::finite(b), x));

    CHECK_THROWS_AS(member_by_cones(fq(1), fq(-1), sq(2)), NotApplicable);
}

TEST_CASE("the two membership routes agree on parabolic and elliptic pairs") {
    for (auto d : {SC, AlgebraDescriptor::sym(2, Q), AlgebraDescriptor::spin(3, Q),
                   dual_extension(SC)}) {
        Rng rng(37);
        for (int k = 0; k < 60; ++k) {
            AlgebraElem a = sample_elem(rng, d, 5);
            AlgebraElem x = sample_elem(rng, d, 5);
            // parabolic (a, inf)
            ChartPoint pa = ChartPoint::finite(a);
            if (transversal(pa, ChartPoint::finite(x)))
                CHECK(member_by_cones(pa, ChartPoint::infinity(d), x) ==
                      cyclically_ordered(pa, ChartPoint::finite(x), ChartPoint::infinity(d)));
            // parabolic (inf, b)
            if (transversal(ChartPoint::finite(x), pa))
                CHECK(member_by_cones(ChartPoint::infinity(d), pa, x) ==
                      cyclically_ordered(ChartPoint::infinity(d), ChartPoint::finite(x), pa));
            // elliptic (a, a + cone)
            AlgebraElem b = jadd(a, sample_cone_elem(rng, d, 5));
            ChartPoint pb = ChartPoint::finite(b);
            if (transversal(pa, ChartPoint::finite(x)) &&
                transversal(ChartPoint::finite(x), pb))
                CHECK(member_by_cones(pa, pb, x) ==
                      cyclically_ordered(pa, ChartPoint::finite(x), pb));
        }
    }
}

TEST_CASE("elliptic images are convex") {
    for (auto d : {SC, AlgebraDescriptor::sym(2, Q)}) {
        Rng rng(41);
        int checked = 0;
        while (checked < 40) {
            AlgebraElem a = sample_elem(rng, d, 5);
            AlgebraElem b = jadd(a, sample_cone_elem(rng, d, 5));
            AlgebraElem x = sample_elem(rng, d, 5);
            AlgebraElem y = sample_elem(rng, d, 5);
            ChartPoint pa = ChartPoint::finite(a), pb = ChartPoint::finite(b);
            if (classify_pair(pa, pb) != ImageClass::Elliptic) continue;
            if (!member_by_cones(pa, pb, x) || !member_by_cones(pa, pb, y)) continue;
            ++checked;
            Rational t = rat(rng.range(1, 9), 10);
            AlgebraElem mid = jadd(jscale(x, 1 - t), jscale(y, t));
            CHECK(member_by_cones(pa, pb, mid));
            if (transversal(pa, ChartPoint::finite(mid)) &&
                transversal(ChartPoint::finite(mid), pb))
                CHECK(cyclically_ordered(pa, ChartPoint::finite(mid), pb));
        }
    }
}

TEST_CASE("hyperbolic images contain both cones and are not convex") {
    auto rep = hyperbolic_superset_check(fq(1), fq(-1), SampleSpec{43, 200, 6});
    INFO(rep.to_text());
    CHECK(rep.find("cone-union-contained")->pass);
    const CheckResult* nc = rep.find("nonconvexity-witness-found");
    REQUIRE(nc != nullptr);
    CHECK(nc->pass);
    // the standard witness: u = 2, v = -2, midpoint 0
    CHECK(nc->witness.find("u=[2]") != std::string::npos);
    CHECK(nc->witness.find("v=[-2]") != std::string::npos);
    CHECK(nc->witness.find("midpoint=[0]") != std::string::npos);

    auto d = AlgebraDescriptor::sym(2, Q);
    AlgebraElem e = AlgebraElem::unit(d);
    auto rep2 = hyperbolic_superset_check(ChartPoint::finite(e),
                                          ChartPoint::finite(jneg(e)), SampleSpec{43, 100, 5});
    INFO(rep2.to_text());
    CHECK(rep2.find("cone-union-contained")->pass);

    CHECK_THROWS_AS(hyperbolic_superset_check(fq(-1), fq(1), SampleSpec{}), Error);
}

TEST_CASE("torus boxes") {
    auto boxes = torus_boxes({rat(1, 2), rat(1, 2)}, {rat(-1, 2), rat(-1, 2)});
    CHECK(boxes.size() == 4);
    auto single = torus_boxes({rat(-1, 2), rat(-1, 2)}, {rat(1, 2), rat(1, 2)});
    CHECK(single.size() == 1);
    auto mixed = torus_boxes({rat(1, 2), rat(-1, 2), rat(1, 2)},
                             {rat(-1, 2), rat(1, 2), rat(-1, 2)});
    CHECK(mixed.size() == 4);

    CHECK_THROWS_AS(torus_boxes({rat(1, 2)}, {rat(1, 2)}), DegenerateEndpoint);
    CHECK_THROWS_AS(torus_boxes({rat(3, 2)}, {rat(1, 2)}), Error);
}

TEST_CASE("box membership matches the product-geometry relation on a grid") {
    std::vector<Rational> a{rat(1, 2), rat(1, 2)};
    std::vector<Rational> b{rat(-1, 2), rat(-1, 2)};
    auto boxes = torus_boxes(a, b);

    auto alg = AlgebraDescriptor::product({SC, SC});
    auto geo = GeometryDescriptor::for_algebra(alg);
    auto lift = [&](const std::vector<Rational>& cube) {
        std::vector<RingElem> coords;
        for (const auto& t : cube) coords.push_back(RingElem(Q, {cube_to_chart(t)}));
        return embed(geo, AlgebraElem(alg, std::move(coords)));
    };
    HomPoint ha = lift(a), hb = lift(b);

    for (long i = 0; i < 12; ++i) {
        for (long j = 0; j < 12; ++j) {
            std::vector<Rational> cube{rat(2 * i + 1, 12) - 1, rat(2 * j + 1, 12) - 1};
            bool in_box = false;
            for (const auto& box : boxes) in_box = in_box || box.contains(cube);
            bool in_rel = cyclically_ordered(ha, lift(cube), hb);
            CHECK(in_box == in_rel);
        }
    }
}

TEST_CASE("rendering is deterministic and matches the membership grid") {
    RenderSpec spec{ChartPoint::origin(SC), ChartPoint::infinity(SC), {0},
                    AlgebraElem::zero(SC),
                    GridSpec{{GridAxis{rat(-3), rat(3), 12}}}};
    RenderResult r1 = render_image(spec);
    RenderResult r2 = render_image(spec);
    CHECK(r1.csv == r2.csv);
    CHECK(r1.svg == r2.svg);
    CHECK(r1.cls == ImageClass::Parabolic);
    CHECK(r1.members == 6); // half line: cell centers at -11/4 ... 11/4, six positive
    CHECK(r1.svg.find("<svg") == 0);
    CHECK(r1.csv.find("x0,member,class") == 0);

    auto d = AlgebraDescriptor::sym(2, Q);
    RenderSpec spec2{ChartPoint::origin(d),
                     ChartPoint::finite(jscale(AlgebraElem::unit(d), 2)),
                     {0, 2},
                     AlgebraElem::zero(d),
                     GridSpec{{GridAxis{rat(-1), rat(3), 8}, GridAxis{rat(-1), rat(3), 8}}}};
    RenderResult r3 = render_image(spec2);
    CHECK(r3.cls == ImageClass::Elliptic);
    // diagonal slice of ]0, 2I[: both diagonal entries in (0,2): 4x4 cells
    CHECK(r3.members == 16);

    CHECK_THROWS_AS(render_image(RenderSpec{ChartPoint::origin(SC), ChartPoint::infinity(SC),
                                            {0, 0, 0}, AlgebraElem::zero(SC), GridSpec{}}),
                    UnsupportedProjection);
}

TEST_CASE("torus box rendering stays stable") {
    auto boxes = torus_boxes({rat(1, 2), rat(1, 2)}, {rat(-1, 2), rat(-1, 2)});
    std::string svg = render_boxes_svg(boxes);
    CHECK(svg == render_boxes_svg(boxes));
    CHECK(svg.find("<svg") == 0);
    // four shaded rectangles plus the background
    std::size_t count = 0;
    for (std::size_t pos = 0; (pos = svg.find("<rect", pos)) != std::string::npos; ++pos)
        ++count;
    CHECK(count == 5);
}
