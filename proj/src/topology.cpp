#include "jorder/topology.hpp"

#include "jorder/errors.hpp"

namespace jorder {

std::vector<std::pair<ChartInterval, ChartInterval>> separating_intervals(
    const ChartPoint& p, const ChartPoint& q, const std::vector<ChartInterval>& catalog,
    const SampleSpec& spec) {
    if (p == q) throw EqualPoints("separation search needs two distinct points");
    const AlgebraDescriptor& d = p.descriptor();

    // declared sample set: the two points, catalog endpoints, and a seeded
    // batch of random chart points
    std::vector<ChartPoint> samples{p, q, ChartPoint::origin(d), ChartPoint::infinity(d),
                                    ChartPoint::finite(AlgebraElem::unit(d))};
    for (const auto& iv : catalog) {
        samples.push_back(iv.a);
        samples.push_back(iv.b);
    }
    Rng rng(spec.seed);
    for (long k = 0; k < spec.cases; ++k) samples.push_back(sample_chart_point(rng, d, spec.bound));

    std::vector<std::pair<ChartInterval, ChartInterval>> out;
    for (const auto& i1 : catalog) {
        if (!interval_contains(i1, p)) continue;
        for (const auto& i2 : catalog) {
            if (!interval_contains(i2, q)) continue;
            bool disjoint = true;
            for (const auto& s : samples)
                if (interval_contains(i1, s) && interval_contains(i2, s)) {
                    disjoint = false;
                    break;
                }
            if (disjoint) out.emplace_back(i1, i2);
        }
    }
    return out;
}

std::vector<ChartInterval> default_interval_catalog(const AlgebraDescriptor& d,
                                                    const SampleSpec& spec) {
    std::vector<ChartInterval> catalog;
    AlgebraElem e = AlgebraElem::unit(d);
    auto fe = [&](long num, long den) { return ChartPoint::finite(jscale(e, rat(num, den))); };
    // scaled-unit intervals in both orientations, and cones at infinity
    for (long t : {1L, 2L, 4L, 6L}) {
        catalog.push_back({fe(-t, 1), fe(t, 1)});
        catalog.push_back({fe(t, 1), fe(-t, 1)});
    }
    catalog.push_back({fe(-1, 2), fe(1, 2)});
    catalog.push_back({fe(1, 2), fe(-1, 2)});
    for (long t : {0L, 1L, -1L, 5L, -5L}) {
        catalog.push_back({fe(t, 1), ChartPoint::infinity(d)});
        catalog.push_back({ChartPoint::infinity(d), fe(t, 1)});
    }
    Rng rng(spec.seed + 1);
    for (long k = 0; k < 8; ++k) {
        ChartPoint a = sample_chart_point(rng, d, spec.bound);
        ChartPoint b = sample_chart_point(rng, d, spec.bound);
        if (transversal(a, b)) catalog.push_back({a, b});
    }
    return catalog;
}

AxiomReport tangent_fiber_inseparability(const AlgebraDescriptor& base, const SampleSpec& spec) {
    if (!is_ordered(base.ring())) throw NoOrder("base instance carries no order");
    AlgebraDescriptor dual = dual_extension(base);

    AxiomReport report;
    report.suite = "tangent-fiber";
    report.subject = dual.name();
    report.spec = spec;

    auto& independent = report.add("membership-ignores-eps-part");
    auto& no_separation = report.add("same-fiber-separation-empty");

    Rng rng(spec.seed);
    for (long k = 0; k < spec.cases; ++k) {
        ChartPoint A = sample_chart_point(rng, dual, spec.bound);
        ChartPoint B = sample_chart_point(rng, dual, spec.bound);
        AlgebraElem x = sample_elem(rng, base, spec.bound);
        AlgebraElem u = sample_elem(rng, base, spec.bound);
        AlgebraElem v = sample_elem(rng, base, spec.bound);
        if (u == v) continue;
        ChartPoint xu = ChartPoint::finite(dual_join(x, u));
        ChartPoint xv = ChartPoint::finite(dual_join(x, v));
        independent.cases++;
        if (cyclically_ordered(A, xu, B) != cyclically_ordered(A, xv, B))
            fail_check(independent, "interval (" + A.str() + "," + B.str() + ") splits fiber of " +
                                        x.str());
    }

    // full catalog separation search between two fixed same-fiber points
    {
        AlgebraElem x = AlgebraElem::unit(base);
        AlgebraElem u = AlgebraElem::zero(base);
        AlgebraElem v = AlgebraElem::unit(base);
        ChartPoint pu = ChartPoint::finite(dual_join(x, u));
        ChartPoint pv = ChartPoint::finite(dual_join(x, v));
        auto catalog = default_interval_catalog(dual, spec);
        auto pairs = separating_intervals(pu, pv, catalog, spec);
        no_separation.cases = static_cast<long>(catalog.size());
        if (!pairs.empty())
            fail_check(no_separation,
                       "found " + std::to_string(pairs.size()) + " separating pairs");
    }
    return report;
}

AxiomReport spectral_ball_check(int n, const SampleSpec& spec) {
    if (n < 1 || n > 3) throw UnsupportedSize("spectral ball check supports n in [1,3]");
    AlgebraDescriptor d = AlgebraDescriptor::sym(n, RingDescriptor::q());

    AxiomReport report;
    report.suite = "spectral-ball";
    report.subject = d.name();
    report.spec = spec;

    auto& agree = report.add("three-characterizations-agree");

    AlgebraElem e = AlgebraElem::unit(d);
    ChartPoint me = ChartPoint::finite(jneg(e));
    ChartPoint pe = ChartPoint::finite(e);
    Rational one(1), mone(-1);

    Rng rng(spec.seed);
    for (long k = 0; k < spec.cases; ++k) {
        AlgebraElem x = k == 0 ? AlgebraElem::zero(d) : sample_elem(rng, d, spec.bound);

        // route 1: the cyclic relation
        bool inside_r = cyclically_ordered(me, ChartPoint::finite(x), pe);
        // route 2: both e - x and e + x positive definite (Sylvester)
        bool inside_cones = cone_contains(jsub(e, x)) && cone_contains(jadd(e, x));
        // route 3: all eigenvalues strictly inside (-1,1) via Sturm count
        QPoly p = char_poly(x.sym_matrix());
        QPoly sf = squarefree_part(p);
        bool inside_sturm = sgn(p.eval(one)) != 0 && sgn(p.eval(mone)) != 0 &&
                            sturm_count(sf, mone, one) == sf.degree();

        agree.cases++;
        if (inside_r != inside_cones || inside_r != inside_sturm)
            fail_check(agree, "x=" + x.str() + " relation=" + std::to_string(inside_r) +
                                  " cones=" + std::to_string(inside_cones) +
                                  " sturm=" + std::to_string(inside_sturm));
    }
    return report;
}

} // namespace jorder
