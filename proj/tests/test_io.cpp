#include <doctest.h>

#include "jorder/errors.hpp"
#include "jorder/instances.hpp"

using namespace jorder;

namespace {

const RingDescriptor Q = RingDescriptor::q();

} // namespace

TEST_CASE("descriptor serialization round-trips") {
    for (auto d : {AlgebraDescriptor::scalar(Q), AlgebraDescriptor::sym(3, Q),
                   AlgebraDescriptor::spin(4, Q),
                   dual_extension(AlgebraDescriptor::sym(2, Q)),
                   AlgebraDescriptor::product({AlgebraDescriptor::scalar(Q),
                                               AlgebraDescriptor::spin(2, Q)})}) {
        CHECK(alg_desc_from_json(alg_desc_to_json(d)) == d);
    }
    CHECK(alg_desc_from_json(Json::parse(R"({"dual-ext": {"scalar": "q"}})")) ==
          dual_extension(AlgebraDescriptor::scalar(Q)));
    CHECK_THROWS_AS(alg_desc_from_json(Json::parse(R"({"weird": 1})")), ConfigError);
    CHECK_THROWS_AS(ring_desc_from_json(Json("nope")), ConfigError);
}

TEST_CASE("element serialization round-trips on samples") {
    for (auto d : {AlgebraDescriptor::sym(2, Q), AlgebraDescriptor::spin(3, Q),
                   dual_extension(AlgebraDescriptor::sym(2, Q)),
                   AlgebraDescriptor::product({AlgebraDescriptor::scalar(Q),
                                               AlgebraDescriptor::scalar(Q)})}) {
        Rng rng(3);
        for (int k = 0; k < 25; ++k) {
            AlgebraElem v = sample_elem(rng, d, 9);
            CHECK(elem_from_json(d, elem_to_json(v)) == v);
            ChartPoint p = sample_chart_point(rng, d, 9);
            CHECK(chart_point_from_json(d, chart_point_to_json(p)) == p);
            GroupWord w = sample_word(rng, d, 5);
            GroupWord back = word_from_json(d, word_to_json(w));
            ChartPoint probe = sample_chart_point(rng, d, 5);
            auto i1 = try_apply_word(w, probe);
            auto i2 = try_apply_word(back, probe);
            CHECK(i1.has_value() == i2.has_value());
            if (i1 && i2) CHECK(*i1 == *i2);
        }
    }
}

TEST_CASE("symmetric matrices may be given in full matrix form") {
    auto d = AlgebraDescriptor::sym(2, Q);
    Json j = Json::parse(R"({"matrix": [["2","1"],["1","1"]]})");
    AlgebraElem v = elem_from_json(d, j);
    CHECK(v == AlgebraElem(d, {RingElem(Q, {rat(2)}), RingElem(Q, {rat(1)}),
                               RingElem(Q, {rat(1)})}));
    Json bad = Json::parse(R"({"matrix": [["2","1"],["3","1"]]})");
    CHECK_THROWS(elem_from_json(d, bad));
}

TEST_CASE("homogeneous points round-trip") {
    for (auto alg : {AlgebraDescriptor::scalar(Q), AlgebraDescriptor::sym(2, Q),
                     dual_extension(AlgebraDescriptor::scalar(Q)),
                     AlgebraDescriptor::product({AlgebraDescriptor::scalar(Q),
                                                 AlgebraDescriptor::scalar(Q)})}) {
        auto geo = GeometryDescriptor::for_algebra(alg);
        Rng rng(7);
        for (int k = 0; k < 20; ++k) {
            HomPoint p = sample_hom_point(rng, geo, 6);
            HomPoint back = hom_point_from_json(geo, hom_point_to_json(p));
            CHECK(point_eq(p, back));
        }
    }
}

TEST_CASE("instance registry") {
    CHECK(find_instance("q") == AlgebraDescriptor::scalar(Q));
    CHECK(find_instance("sym3q") == AlgebraDescriptor::sym(3, Q));
    CHECK(find_instance("dual-sym2q") == AlgebraDescriptor::sym(2, RingDescriptor::dual_q()));
    CHECK(find_instance("torus3").dim() == 3);
    CHECK(find_instance("trivial-n").ring() == RingDescriptor::trivial_n_order());
    CHECK_THROWS_AS(find_instance("nope"), ConfigError);

    Json config = Json::parse(R"({"instances": {"my": {"spin": {"m": 2, "ring": "q"}}}})");
    CHECK(find_instance("my", &config) == AlgebraDescriptor::spin(2, Q));
    CHECK(find_instance("q", &config) == AlgebraDescriptor::scalar(Q));
}

TEST_CASE("compact point syntax") {
    auto sc = AlgebraDescriptor::scalar(Q);
    auto pts = parse_point_list(sc, "1,2,-1");
    REQUIRE(pts.size() == 3);
    CHECK(pts[1].value().coord(0) == RingElem(Q, {rat(2)}));

    auto with_inf = parse_point_list(sc, "1/2;inf;-3");
    REQUIRE(with_inf.size() == 3);
    CHECK(with_inf[1].is_infinity());

    auto d = AlgebraDescriptor::sym(2, Q);
    auto mats = parse_point_list(d, "1,0,1;2,1,1");
    REQUIRE(mats.size() == 2);
    CHECK(mats[1].value() == AlgebraElem(d, {RingElem(Q, {rat(2)}), RingElem(Q, {rat(1)}),
                                             RingElem(Q, {rat(1)})}));
    CHECK_THROWS_AS(parse_point_list(d, "1,0"), ConfigError);
}

TEST_CASE("report serialization is deterministic") {
    auto rep = check_ordered_ring_axioms(Q, SampleSpec{9, 50, 5});
    CHECK(rep.to_text() == rep.to_text());
    Json j = report_to_json(rep);
    CHECK(j.at("suite") == "ordered-ring");
    CHECK(j.at("checks").size() == rep.checks.size());
}
