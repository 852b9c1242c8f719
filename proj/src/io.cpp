#include "jorder/io.hpp"

#include <fstream>
#include <sstream>

#include "jorder/errors.hpp"

namespace jorder {

Json ring_desc_to_json(const RingDescriptor& d) {
    switch (d.kind()) {
        case RingKind::Q: return "q";
        case RingKind::DualQ: return "q-eps";
        case RingKind::GaussQ: return "q-i";
        case RingKind::DualGaussQ: return "q-eps-i";
        case RingKind::ZInt: return "z";
        case RingKind::TrivialNOrder: return "trivial-n";
        case RingKind::Product: {
            Json arr = Json::array();
            for (const auto& f : d.factors()) arr.push_back(ring_desc_to_json(f));
            return Json{{"product", arr}};
        }
    }
    throw Error("unreachable");
}

RingDescriptor ring_desc_from_json(const Json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "q") return RingDescriptor::q();
        if (s == "q-eps") return RingDescriptor::dual_q();
        if (s == "q-i") return RingDescriptor::gauss_q();
        if (s == "q-eps-i") return RingDescriptor::dual_gauss_q();
        if (s == "z") return RingDescriptor::z_int();
        if (s == "trivial-n") return RingDescriptor::trivial_n_order();
        throw ConfigError("unknown ring '" + s + "'");
    }
    if (j.is_object() && j.contains("product")) {
        std::vector<RingDescriptor> fs;
        for (const auto& f : j.at("product")) fs.push_back(ring_desc_from_json(f));
        return RingDescriptor::product(std::move(fs));
    }
    throw ConfigError("malformed ring descriptor: " + j.dump());
}

Json alg_desc_to_json(const AlgebraDescriptor& d) {
    switch (d.kind()) {
        case AlgKind::Scalar: return Json{{"scalar", ring_desc_to_json(d.ring())}};
        case AlgKind::Sym:
            return Json{{"sym", Json{{"n", d.n()}, {"ring", ring_desc_to_json(d.ring())}}}};
        case AlgKind::Spin:
            return Json{{"spin", Json{{"m", d.n()}, {"ring", ring_desc_to_json(d.ring())}}}};
        case AlgKind::Product: {
            Json arr = Json::array();
            for (const auto& c : d.components()) arr.push_back(alg_desc_to_json(c));
            return Json{{"product", arr}};
        }
    }
    throw Error("unreachable");
}

AlgebraDescriptor alg_desc_from_json(const Json& j) {
    if (!j.is_object()) throw ConfigError("malformed algebra descriptor: " + j.dump());
    if (j.contains("scalar")) return AlgebraDescriptor::scalar(ring_desc_from_json(j.at("scalar")));
    if (j.contains("sym")) {
        const Json& s = j.at("sym");
        return AlgebraDescriptor::sym(s.at("n").get<int>(), ring_desc_from_json(s.at("ring")));
    }
    if (j.contains("spin")) {
        const Json& s = j.at("spin");
        return AlgebraDescriptor::spin(s.at("m").get<int>(), ring_desc_from_json(s.at("ring")));
    }
    if (j.contains("product")) {
        std::vector<AlgebraDescriptor> cs;
        for (const auto& c : j.at("product")) cs.push_back(alg_desc_from_json(c));
        return AlgebraDescriptor::product(std::move(cs));
    }
    if (j.contains("dual-ext")) return dual_extension(alg_desc_from_json(j.at("dual-ext")));
    throw ConfigError("malformed algebra descriptor: " + j.dump());
}

Json ring_elem_to_json(const RingElem& e) {
    const RingDescriptor& d = e.descriptor();
    switch (d.kind()) {
        case RingKind::Q:
        case RingKind::ZInt:
        case RingKind::TrivialNOrder: return rational_str(e.coord(0));
        case RingKind::DualQ:
            return Json{{"re", rational_str(e.coord(0))}, {"eps", rational_str(e.coord(1))}};
        case RingKind::GaussQ:
            return Json{{"re", rational_str(e.coord(0))}, {"im", rational_str(e.coord(1))}};
        case RingKind::DualGaussQ:
            return Json{{"re", Json{{"re", rational_str(e.coord(0))},
                                    {"eps", rational_str(e.coord(1))}}},
                        {"im", Json{{"re", rational_str(e.coord(2))},
                                    {"eps", rational_str(e.coord(3))}}}};
        case RingKind::Product: {
            Json arr = Json::array();
            std::size_t off = 0;
            for (const auto& f : d.factors()) {
                RingElem part(f,
                              std::vector<Rational>(e.coords().begin() + static_cast<long>(off),
                                                    e.coords().begin() +
                                                        static_cast<long>(off + f.arity())));
                arr.push_back(ring_elem_to_json(part));
                off += f.arity();
            }
            return arr;
        }
    }
    throw Error("unreachable");
}

namespace {

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ConfigError("expected a rational \"p/q\" string, got " + j.dump());
}

Rational field_or_zero(const Json& j, const char* key) {
    if (j.is_object() && j.contains(key)) return rational_from_json(j.at(key));
    return Rational(0);
}

} // namespace

RingElem ring_elem_from_json(const RingDescriptor& d, const Json& j) {
    switch (d.kind()) {
        case RingKind::Q:
        case RingKind::ZInt:
        case RingKind::TrivialNOrder: return RingElem(d, {rational_from_json(j)});
        case RingKind::DualQ:
            if (!j.is_object()) return RingElem(d, {rational_from_json(j), Rational(0)});
            return RingElem(d, {field_or_zero(j, "re"), field_or_zero(j, "eps")});
        case RingKind::GaussQ:
            if (!j.is_object()) return RingElem(d, {rational_from_json(j), Rational(0)});
            return RingElem(d, {field_or_zero(j, "re"), field_or_zero(j, "im")});
        case RingKind::DualGaussQ: {
            if (!j.is_object())
                return RingElem(d, {rational_from_json(j), Rational(0), Rational(0), Rational(0)});
            Json re = j.contains("re") ? j.at("re") : Json();
            Json im = j.contains("im") ? j.at("im") : Json();
            auto pair_of = [](const Json& x) -> std::pair<Rational, Rational> {
                if (x.is_null()) return {Rational(0), Rational(0)};
                if (!x.is_object()) return {rational_from_json(x), Rational(0)};
                return {field_or_zero(x, "re"), field_or_zero(x, "eps")};
            };
            auto [rr, re_eps] = pair_of(re);
            auto [ir, im_eps] = pair_of(im);
            return RingElem(d, {rr, re_eps, ir, im_eps});
        }
        case RingKind::Product: {
            if (!j.is_array() || j.size() != d.factors().size())
                throw ConfigError("product element must be an array of factor elements");
            std::vector<Rational> coords;
            for (std::size_t i = 0; i < d.factors().size(); ++i) {
                RingElem part = ring_elem_from_json(d.factors()[i], j.at(i));
                for (const auto& q : part.coords()) coords.push_back(q);
            }
            return RingElem(d, std::move(coords));
        }
    }
    throw Error("unreachable");
}

Json elem_to_json(const AlgebraElem& e) {
    Json arr = Json::array();
    for (const auto& c : e.coords()) arr.push_back(ring_elem_to_json(c));
    return arr;
}

Json elem_to_record_json(const AlgebraElem& e) {
    return Json{{"descriptor", alg_desc_to_json(e.descriptor())},
                {"coordinates", elem_to_json(e)}};
}

AlgebraElem elem_from_json(const AlgebraDescriptor& d, const Json& j) {
    if (j.is_object() && j.contains("descriptor") && j.contains("coordinates")) {
        // self-describing record form
        AlgebraDescriptor declared = alg_desc_from_json(j.at("descriptor"));
        if (declared != d)
            throw ConfigError("element descriptor " + declared.name() +
                              " does not match the expected " + d.name());
        return elem_from_json(d, j.at("coordinates"));
    }
    if (j.is_object() && j.contains("matrix")) {
        if (d.kind() != AlgKind::Sym)
            throw ConfigError("matrix form is only valid for Sym instances");
        const Json& rows = j.at("matrix");
        std::size_t n = static_cast<std::size_t>(d.n());
        if (!rows.is_array() || rows.size() != n)
            throw ConfigError("matrix must have " + std::to_string(n) + " rows");
        RingMatrix m(d.ring(), n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!rows.at(i).is_array() || rows.at(i).size() != n)
                throw ConfigError("matrix row has wrong length");
            for (std::size_t k = 0; k < n; ++k)
                m.at(i, k) = ring_elem_from_json(d.ring(), rows.at(i).at(k));
        }
        return AlgebraElem::from_sym_matrix(d, m); // validates symmetry
    }
    if (!j.is_array() || j.size() != d.dim())
        throw ConfigError("element needs " + std::to_string(d.dim()) + " coordinates");
    std::vector<RingElem> coords;
    std::size_t idx = 0;
    for (const auto& [leaf, off] : d.leaves())
        for (std::size_t i = 0; i < leaf.dim(); ++i, ++idx)
            coords.push_back(ring_elem_from_json(leaf.ring(), j.at(idx)));
    return AlgebraElem(d, std::move(coords));
}

Json chart_point_to_json(const ChartPoint& p) {
    if (p.is_infinity()) return Json{{"inf", true}};
    return Json{{"v", elem_to_json(p.value())}};
}

ChartPoint chart_point_from_json(const AlgebraDescriptor& d, const Json& j) {
    if (j.is_object() && j.contains("inf") && j.at("inf").get<bool>())
        return ChartPoint::infinity(d);
    if (j.is_object() && j.contains("v")) return ChartPoint::finite(elem_from_json(d, j.at("v")));
    throw ConfigError("malformed chart point: " + j.dump());
}

Json word_to_json(const GroupWord& w) {
    Json arr = Json::array();
    for (const auto& g : w.gens) {
        switch (g.kind()) {
            case GenKind::Trans: arr.push_back(Json{{"gen", "trans"}, {"v", elem_to_json(g.arg())}}); break;
            case GenKind::TildeTrans:
                arr.push_back(Json{{"gen", "tilde-trans"}, {"v", elem_to_json(g.arg())}});
                break;
            case GenKind::Quad: arr.push_back(Json{{"gen", "quad"}, {"y", elem_to_json(g.arg())}}); break;
            case GenKind::Neg: arr.push_back(Json{{"gen", "neg"}}); break;
            case GenKind::Jinv: arr.push_back(Json{{"gen", "jinv"}}); break;
        }
    }
    return arr;
}

GroupWord word_from_json(const AlgebraDescriptor& d, const Json& j) {
    if (!j.is_array()) throw ConfigError("word must be an array of generators");
    GroupWord w;
    for (const auto& g : j) {
        std::string kind = g.at("gen").get<std::string>();
        if (kind == "trans") w.gens.push_back(Generator::trans(elem_from_json(d, g.at("v"))));
        else if (kind == "tilde-trans")
            w.gens.push_back(Generator::tilde_trans(elem_from_json(d, g.at("v"))));
        else if (kind == "quad") w.gens.push_back(Generator::quad(elem_from_json(d, g.at("y"))));
        else if (kind == "neg") w.gens.push_back(Generator::neg());
        else if (kind == "jinv") w.gens.push_back(Generator::jinv());
        else throw ConfigError("unknown generator '" + kind + "'");
    }
    return w;
}

Json hom_point_to_json(const HomPoint& p) {
    switch (p.geometry().kind()) {
        case GeoKind::ProjLine:
            return Json::array({ring_elem_to_json(p.proj_p()), ring_elem_to_json(p.proj_q())});
        case GeoKind::Lagrangian: {
            Json rows = Json::array();
            const RingMatrix& f = p.frame();
            for (std::size_t i = 0; i < f.rows(); ++i) {
                Json row = Json::array();
                for (std::size_t j = 0; j < f.cols(); ++j)
                    row.push_back(rational_str(f.at(i, j).coord(0)));
                rows.push_back(row);
            }
            return rows;
        }
        case GeoKind::ProductGeo: {
            Json arr = Json::array();
            for (const auto& part : p.parts()) arr.push_back(hom_point_to_json(part));
            return arr;
        }
    }
    throw Error("unreachable");
}

HomPoint hom_point_from_json(const GeometryDescriptor& geo, const Json& j) {
    switch (geo.kind()) {
        case GeoKind::ProjLine: {
            if (!j.is_array() || j.size() != 2)
                throw ConfigError("projective point must be a pair [p, q]");
            const RingDescriptor& ring = geo.algebra().ring();
            return HomPoint::proj_pair(geo, ring_elem_from_json(ring, j.at(0)),
                                       ring_elem_from_json(ring, j.at(1)));
        }
        case GeoKind::Lagrangian: {
            std::size_t n = static_cast<std::size_t>(geo.n());
            if (!j.is_array() || j.size() != 2 * n)
                throw ConfigError("frame must have 2n rows");
            RingMatrix f(RingDescriptor::q(), 2 * n, n);
            for (std::size_t i = 0; i < 2 * n; ++i) {
                if (!j.at(i).is_array() || j.at(i).size() != n)
                    throw ConfigError("frame row has wrong length");
                for (std::size_t k = 0; k < n; ++k)
                    f.at(i, k) = ring_elem_from_json(RingDescriptor::q(), j.at(i).at(k));
            }
            return HomPoint::lag_frame(geo, std::move(f));
        }
        case GeoKind::ProductGeo: {
            if (!j.is_array() || j.size() != geo.components().size())
                throw ConfigError("product point must list one entry per component");
            std::vector<HomPoint> parts;
            for (std::size_t i = 0; i < geo.components().size(); ++i)
                parts.push_back(hom_point_from_json(geo.components()[i], j.at(i)));
            return HomPoint::product(geo, std::move(parts));
        }
    }
    throw Error("unreachable");
}

Json report_to_json(const AxiomReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"name", c.name},
                              {"pass", c.pass},
                              {"cases", c.cases},
                              {"witness", c.witness},
                              {"asserted", c.asserted}});
    return Json{{"suite", r.suite}, {"subject", r.subject},  {"seed", r.spec.seed},
                {"cases", r.spec.cases}, {"bound", r.spec.bound}, {"checks", checks}};
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

std::vector<ChartPoint> parse_point_list(const AlgebraDescriptor& d, const std::string& text) {
    std::vector<std::string> parts;
    if (text.find(';') != std::string::npos) {
        parts = split(text, ';');
    } else if (d.dim() == 1) {
        parts = split(text, ','); // scalar shorthand: "1,2,-1"
    } else {
        parts = {text};
    }
    std::vector<ChartPoint> out;
    for (const auto& p : parts) {
        if (p == "inf") {
            out.push_back(ChartPoint::infinity(d));
            continue;
        }
        auto coords = split(p, ',');
        if (coords.size() != d.dim())
            throw ConfigError("element '" + p + "' needs " + std::to_string(d.dim()) +
                              " coordinates");
        std::vector<RingElem> c;
        std::size_t idx = 0;
        for (const auto& [leaf, off] : d.leaves())
            for (std::size_t i = 0; i < leaf.dim(); ++i, ++idx)
                c.push_back(RingElem::from_rational(leaf.ring(), parse_rational(coords[idx])));
        out.push_back(ChartPoint::finite(AlgebraElem(d, std::move(c))));
    }
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& s : split(text, ',')) out.push_back(parse_rational(s));
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << content;
    if (!f) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

} // namespace jorder
