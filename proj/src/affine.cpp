#include "jorder/affine.hpp"

#include <sstream>

#include "jorder/errors.hpp"

namespace jorder {

char image_class_letter(ImageClass c) {
    switch (c) {
        case ImageClass::Parabolic: return 'P';
        case ImageClass::Elliptic: return 'E';
        case ImageClass::Hyperbolic: return 'H';
    }
    return '?';
}

ImageClass classify_pair(const ChartPoint& a, const ChartPoint& b) {
    if (!transversal(a, b)) throw NotTransversal("classify_pair needs a transversal pair");
    if (a.is_infinity() || b.is_infinity()) return ImageClass::Parabolic;
    if (cone_contains(jsub(b.value(), a.value()))) return ImageClass::Elliptic;
    return ImageClass::Hyperbolic;
}

bool member_by_cones(const ChartPoint& a, const ChartPoint& b, const AlgebraElem& x) {
    switch (classify_pair(a, b)) {
        case ImageClass::Parabolic:
            if (b.is_infinity()) return cone_contains(jsub(x, a.value()));
            return cone_contains(jsub(b.value(), x));
        case ImageClass::Elliptic:
            return cone_contains(jsub(x, a.value())) && cone_contains(jsub(b.value(), x));
        case ImageClass::Hyperbolic:
            throw NotApplicable("cone-path membership undefined for hyperbolic pairs");
    }
    throw Error("unreachable");
}

AxiomReport hyperbolic_superset_check(const ChartPoint& a, const ChartPoint& b,
                                      const SampleSpec& spec) {
    if (a.is_infinity() || b.is_infinity())
        throw Error("hyperbolic check needs two finite endpoints");
    if (!cone_contains(jsub(a.value(), b.value())))
        throw Error("hyperbolic check needs b < a");
    const AlgebraDescriptor& d = a.descriptor();

    AxiomReport report;
    report.suite = "hyperbolic-image";
    report.subject = d.name();
    report.spec = spec;

    auto& contained = report.add("cone-union-contained");
    auto& nonconvex = report.add("nonconvexity-witness-found", false);
    auto& gap = report.add("equality-gap-witness-found", false);
    nonconvex.pass = false;
    nonconvex.witness = "none found";
    gap.pass = false;
    gap.witness = "none found";

    Rng rng(spec.seed);
    AlgebraElem e = AlgebraElem::unit(d);
    for (long k = 0; k < spec.cases; ++k) {
        // first case probes the standard witness pattern u=a+e, v=b-e
        AlgebraElem w1 = k == 0 ? e : sample_cone_elem(rng, d, spec.bound);
        AlgebraElem w2 = k == 0 ? e : sample_cone_elem(rng, d, spec.bound);
        AlgebraElem u = jadd(a.value(), w1);
        AlgebraElem v = jsub(b.value(), w2);

        contained.cases += 2;
        if (!cyclically_ordered(a, ChartPoint::finite(u), b))
            fail_check(contained, "x=" + u.str() + " in a+cone, outside the interval");
        if (!cyclically_ordered(a, ChartPoint::finite(v), b))
            fail_check(contained, "x=" + v.str() + " in b-cone, outside the interval");

        if (!nonconvex.pass) {
            AlgebraElem mid = jscale(jadd(u, v), rat(1, 2));
            if (transversal(a, ChartPoint::finite(mid)) &&
                transversal(ChartPoint::finite(mid), b) &&
                !cyclically_ordered(a, ChartPoint::finite(mid), b)) {
                nonconvex.pass = true;
                nonconvex.witness = "u=" + u.str() + " v=" + v.str() + " midpoint=" + mid.str();
            }
        }
        if (!gap.pass) {
            AlgebraElem x = sample_elem(rng, d, spec.bound);
            if (cyclically_ordered(a, ChartPoint::finite(x), b) &&
                !cone_contains(jsub(x, a.value())) && !cone_contains(jsub(b.value(), x))) {
                gap.pass = true;
                gap.witness = "x=" + x.str() + " inside but in neither cone";
            }
        }
    }
    return report;
}

bool Box::contains(const std::vector<Rational>& point) const {
    if (point.size() != sides.size()) throw Error("box dimension mismatch");
    for (std::size_t i = 0; i < sides.size(); ++i)
        if (!(sides[i].first < point[i] && point[i] < sides[i].second)) return false;
    return true;
}

std::string Box::str() const {
    std::string s;
    for (std::size_t i = 0; i < sides.size(); ++i) {
        if (i) s += " x ";
        s += "(" + sides[i].first.get_str() + "," + sides[i].second.get_str() + ")";
    }
    return s;
}

std::vector<Box> torus_boxes(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size() || a.empty()) throw Error("endpoint dimension mismatch");
    Rational one(1);
    std::vector<std::vector<std::pair<Rational, Rational>>> pieces;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(abs(a[i]) < one) || !(abs(b[i]) < one))
            throw Error("endpoints must lie inside the open cube");
        if (a[i] == b[i])
            throw DegenerateEndpoint("a and b agree in coordinate " + std::to_string(i));
        if (a[i] < b[i]) {
            pieces.push_back({{a[i], b[i]}});
        } else {
            pieces.push_back({{a[i], one}, {-one, b[i]}});
        }
    }
    std::vector<Box> out;
    std::vector<std::size_t> pick(a.size(), 0);
    for (;;) {
        Box box;
        for (std::size_t i = 0; i < a.size(); ++i) box.sides.push_back(pieces[i][pick[i]]);
        out.push_back(std::move(box));
        // odometer over the per-coordinate pieces
        std::size_t i = a.size();
        while (i > 0) {
            --i;
            if (pick[i] + 1 < pieces[i].size()) {
                ++pick[i];
                break;
            }
            pick[i] = 0;
            if (i == 0) return out;
        }
    }
}

Rational cube_to_chart(const Rational& t) {
    if (!(abs(t) < Rational(1))) throw Error("cube coordinate must lie in (-1,1)");
    Rational r = t / (1 - abs(t));
    r.canonicalize();
    return r;
}

namespace {

// pixel coordinate with three exact decimals
std::string fmt_px(const Rational& q) {
    Rational scaled = q * 1000;
    Int num = scaled.get_num(), den = scaled.get_den();
    Int half_num = 2 * num + den; // floor(num/den + 1/2) = floor((2num+den)/(2den))
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), half_num.get_mpz_t(), Int(2 * den).get_mpz_t());
    bool negative = r < 0;
    Int absr = abs(r);
    Int whole = absr / 1000, frac = absr % 1000;
    std::string s = (negative ? "-" : "") + whole.get_str();
    if (frac != 0) {
        std::string f = frac.get_str();
        while (f.size() < 3) f = "0" + f;
        while (!f.empty() && f.back() == '0') f.pop_back();
        s += "." + f;
    }
    return s;
}

const char* kFillColor = "#e08030";

std::string svg_header() {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" "
           "viewBox=\"0 0 512 512\">\n"
           "<rect x=\"0\" y=\"0\" width=\"512\" height=\"512\" fill=\"#ffffff\" "
           "stroke=\"#000000\"/>\n";
}

} // namespace

RenderResult render_image(const RenderSpec& spec) {
    if (spec.axes.empty() || spec.axes.size() > 2)
        throw UnsupportedProjection("renderable slices are 1- or 2-dimensional");
    if (spec.axes.size() != spec.grid.axes.size())
        throw UnsupportedProjection("grid axis count must match the projection");
    const AlgebraDescriptor& d = spec.pin.descriptor();
    if (spec.a.descriptor() != d || spec.b.descriptor() != d)
        throw DescriptorMismatch("render endpoints over a different algebra");
    for (std::size_t ax : spec.axes)
        if (ax >= d.dim()) throw UnsupportedProjection("axis index out of range");
    for (const auto& ga : spec.grid.axes)
        if (ga.steps < 1 || !(ga.lo < ga.hi)) throw Error("bad grid axis");

    RenderResult out;
    out.cls = classify_pair(spec.a, spec.b);

    // sample at cell centers
    auto cell_value = [](const GridAxis& ga, long k) -> Rational {
        return ga.lo + (ga.hi - ga.lo) * (2 * k + 1) / (2 * ga.steps);
    };

    std::ostringstream csv;
    for (std::size_t i = 0; i < spec.axes.size(); ++i) csv << "x" << i << ",";
    csv << "member,class\n";

    std::ostringstream cells;
    bool two_d = spec.axes.size() == 2;
    long steps0 = spec.grid.axes[0].steps;
    long steps1 = two_d ? spec.grid.axes[1].steps : 1;

    auto leaf_rings = [&] {
        std::vector<RingDescriptor> rings;
        for (const auto& [leaf, off] : d.leaves())
            for (std::size_t i = 0; i < leaf.dim(); ++i) rings.push_back(leaf.ring());
        return rings;
    }();

    for (long k1 = 0; k1 < steps1; ++k1) {
        for (long k0 = 0; k0 < steps0; ++k0) {
            std::vector<Rational> vals;
            vals.push_back(cell_value(spec.grid.axes[0], k0));
            if (two_d) vals.push_back(cell_value(spec.grid.axes[1], k1));

            std::vector<RingElem> coords(spec.pin.coords());
            for (std::size_t i = 0; i < spec.axes.size(); ++i) {
                Rational v = vals[i];
                v.canonicalize();
                coords[spec.axes[i]] = RingElem::from_rational(leaf_rings[spec.axes[i]], v);
            }
            AlgebraElem x(d, std::move(coords));
            bool member = cyclically_ordered(spec.a, ChartPoint::finite(x), spec.b);
            if (member) ++out.members;

            for (const auto& v : vals) csv << v.get_str() << ",";
            csv << (member ? 1 : 0) << "," << image_class_letter(out.cls) << "\n";

            if (member) {
                const GridAxis& gx = spec.grid.axes[0];
                Rational px = Rational(512) * (vals[0] - gx.lo) / (gx.hi - gx.lo) -
                              rat(256, steps0);
                Rational pw = rat(512, steps0);
                Rational py(0), ph(512);
                if (two_d) {
                    const GridAxis& gy = spec.grid.axes[1];
                    py = Rational(512) * (gy.hi - vals[1]) / (gy.hi - gy.lo) -
                         rat(256, steps1);
                    ph = rat(512, steps1);
                }
                cells << "<rect x=\"" << fmt_px(px) << "\" y=\"" << fmt_px(py) << "\" width=\""
                      << fmt_px(pw) << "\" height=\"" << fmt_px(ph) << "\" fill=\"" << kFillColor
                      << "\"/>\n";
            }
        }
    }

    out.csv = csv.str();
    out.svg = svg_header() + cells.str() + "</svg>\n";
    return out;
}

std::string render_boxes_svg(const std::vector<Box>& boxes) {
    for (const auto& b : boxes)
        if (b.sides.size() != 2)
            throw UnsupportedProjection("box rendering is two-dimensional only");
    std::ostringstream os;
    os << svg_header();
    // cube (-1,1)^2 onto the 512 viewport, y up
    auto px = [](const Rational& t) { return fmt_px(Rational(256) * (t + 1)); };
    auto py = [](const Rational& t) { return fmt_px(Rational(256) * (1 - t)); };
    for (const auto& b : boxes) {
        const auto& [x0, x1] = b.sides[0];
        const auto& [y0, y1] = b.sides[1];
        os << "<rect x=\"" << px(x0) << "\" y=\"" << py(y1) << "\" width=\""
           << fmt_px(Rational(256) * (x1 - x0)) << "\" height=\""
           << fmt_px(Rational(256) * (y1 - y0)) << "\" fill=\"" << kFillColor
           << "\" stroke=\"#000000\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace jorder
