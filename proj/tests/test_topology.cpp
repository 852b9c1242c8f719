#include <doctest.h>

#include "jorder/errors.hpp"
#include "jorder/topology.hpp"

using namespace jorder;

namespace {

const RingDescriptor Q = RingDescriptor::q();
const AlgebraDescriptor SC = AlgebraDescriptor::scalar(Q);

ChartPoint fq(long num, long den = 1) {
    return ChartPoint::finite(AlgebraElem(SC, {RingElem(Q, {rat(num, den)})}));
}

QPoly poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.push_back(rat(v));
    return QPoly(std::move(c));
}

} // namespace

TEST_CASE("sturm counting on reference polynomials") {
    // x^2 - 2: both roots outside (-1, 1]
    CHECK(sturm_count(poly({-2, 0, 1}), rat(-1), rat(1)) == 0);
    CHECK(sturm_count(poly({-2, 0, 1}), rat(-2), rat(2)) == 2);
    // x^2 - 1: only the root at +1 lies in (-1, 1]
    CHECK(sturm_count(poly({-1, 0, 1}), rat(-1), rat(1)) == 1);
    // x(x-1)(x+2) = x^3 + x^2 - 2x
    CHECK(sturm_count(poly({0, -2, 1, 1}), rat(-1), rat(1)) == 2);
    // squarefree part of x^2 is x, with a single root in (-1, 1]
    QPoly sf = squarefree_part(poly({0, 0, 1}));
    CHECK(sf.degree() == 1);
    CHECK(sturm_count(sf, rat(-1), rat(1)) == 1);
}

TEST_CASE("characteristic polynomials") {
    RingMatrix m(Q, 2, 2);
    m.at(0, 1) = RingElem(Q, {rat(1)});
    m.at(1, 0) = RingElem(Q, {rat(1)});
    CHECK(char_poly(m) == poly({-1, 0, 1})); // x^2 - 1

    RingMatrix a(Q, 2, 2);
    a.at(0, 0) = RingElem(Q, {rat(2)});
    a.at(0, 1) = RingElem(Q, {rat(1)});
    a.at(1, 0) = RingElem(Q, {rat(1)});
    a.at(1, 1) = RingElem(Q, {rat(1)});
    CHECK(char_poly(a) == poly({1, -3, 1})); // x^2 - 3x + 1
}

TEST_CASE("spectral ball: frozen probes") {
    auto d = AlgebraDescriptor::sym(2, Q);
    AlgebraElem e = AlgebraElem::unit(d);
    ChartPoint me = ChartPoint::finite(jneg(e)), pe = ChartPoint::finite(e);

    // x = 0 inside
    CHECK(cyclically_ordered(me, ChartPoint::origin(d), pe));
    // x = diag(1/2, -3/4) inside
    AlgebraElem x1(d, {RingElem(Q, {rat(1, 2)}), RingElem(Q, {rat(0)}),
                       RingElem(Q, {rat(-3, 4)})});
    CHECK(cyclically_ordered(me, ChartPoint::finite(x1), pe));
    CHECK(cone_contains(jsub(e, x1)));
    CHECK(cone_contains(jadd(e, x1)));
    // x = [[0,1],[1,0]] has eigenvalues +-1, not inside
    AlgebraElem x2(d, {RingElem(Q, {rat(0)}), RingElem(Q, {rat(1)}), RingElem(Q, {rat(0)})});
    CHECK_FALSE(cyclically_ordered(me, ChartPoint::finite(x2), pe));
    QPoly p = char_poly(x2.sym_matrix());
    CHECK(sgn(p.eval(rat(1))) == 0); // root exactly at the boundary
}

TEST_CASE("spectral ball: the three characterizations agree on samples") {
    for (int n : {1, 2, 3}) {
        auto rep = spectral_ball_check(n, SampleSpec{3, 150, 4});
        INFO(rep.to_text());
        CHECK(rep.all_pass());
    }
    CHECK_THROWS_AS(spectral_ball_check(4, SampleSpec{}), UnsupportedSize);
}

TEST_CASE("separating intervals in rank one") {
    SampleSpec spec{5, 100, 6};
    auto catalog = default_interval_catalog(SC, spec);
    auto pairs = separating_intervals(fq(0), fq(5), catalog, spec);
    CHECK_FALSE(pairs.empty());

    // 0 and infinity are separated by ]-1,1[ and ]1,-1[
    std::vector<ChartInterval> two{{fq(-1), fq(1)}, {fq(1), fq(-1)}};
    CHECK(interval_contains(two[1], ChartPoint::infinity(SC)));
    auto sep = separating_intervals(fq(0), ChartPoint::infinity(SC), two, spec);
    REQUIRE(sep.size() == 1);
    CHECK(sep[0].first.a == fq(-1));
    CHECK(sep[0].second.a == fq(1));

    CHECK_THROWS_AS(separating_intervals(fq(0), fq(0), catalog, spec), EqualPoints);
}

TEST_CASE("tangent fibers cannot be separated") {
    // frozen probe: 1 + 3 eps and 1 - 7 eps agree in every interval over Q[eps]
    auto dd = dual_extension(SC);
    auto D = RingDescriptor::dual_q();
    ChartPoint p1 = ChartPoint::finite(AlgebraElem(dd, {RingElem(D, {rat(1), rat(3)})}));
    ChartPoint p2 = ChartPoint::finite(AlgebraElem(dd, {RingElem(D, {rat(1), rat(-7)})}));
    ChartInterval omega{ChartPoint::origin(dd), ChartPoint::infinity(dd)};
    CHECK(interval_contains(omega, p1));
    CHECK(interval_contains(omega, p2));

    for (auto base : {SC, AlgebraDescriptor::sym(2, Q)}) {
        auto rep = tangent_fiber_inseparability(base, SampleSpec{7, 120, 5});
        INFO(rep.to_text());
        CHECK(rep.all_pass());
    }
}
