// Python bindings for the core operations: instances, exact elements,
// Jordan arithmetic, the cyclic relation in both models, affine images and
// the axiom suites. Scalars cross the boundary as "p/q" strings to keep
// exactness end to end.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jorder/instances.hpp"
#include "jorder/topology.hpp"
#include "jorder/tube.hpp"

namespace py = pybind11;
using namespace jorder;

namespace {

AlgebraDescriptor resolve(const std::string& name_or_json) {
    if (!name_or_json.empty() && name_or_json.front() == '{')
        return alg_desc_from_json(Json::parse(name_or_json));
    return find_instance(name_or_json);
}

AlgebraElem elem_of(const AlgebraDescriptor& d, const std::string& json_text) {
    return elem_from_json(d, Json::parse(json_text));
}

ChartPoint point_of(const AlgebraDescriptor& d, const std::string& json_text) {
    Json j = Json::parse(json_text);
    if (j.is_object()) return chart_point_from_json(d, j);
    return ChartPoint::finite(elem_from_json(d, j));
}

py::dict report_dict(const AxiomReport& rep) {
    py::dict out;
    out["suite"] = rep.suite;
    out["subject"] = rep.subject;
    out["pass"] = rep.all_pass();
    out["text"] = rep.to_text();
    py::list checks;
    for (const auto& c : rep.checks) {
        py::dict ch;
        ch["name"] = c.name;
        ch["pass"] = c.pass;
        ch["cases"] = c.cases;
        ch["witness"] = c.witness;
        ch["asserted"] = c.asserted;
        checks.append(ch);
    }
    out["checks"] = checks;
    return out;
}

SampleSpec spec_of(std::uint64_t seed, long cases, long bound) {
    return SampleSpec{seed, cases, bound};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact partially ordered Jordan algebras, symmetric cones and the "
              "cyclic order of their geometries";

    m.def("instances", [] {
        py::list out;
        for (const auto& [alias, desc] : builtin_instances()) out.append(alias);
        return out;
    });

    m.def("instance_name", [](const std::string& inst) { return resolve(inst).name(); });
    m.def("instance_dim", [](const std::string& inst) { return resolve(inst).dim(); });

    m.def("unit", [](const std::string& inst) {
        return elem_to_json(AlgebraElem::unit(resolve(inst))).dump();
    });
    m.def("zero", [](const std::string& inst) {
        return elem_to_json(AlgebraElem::zero(resolve(inst))).dump();
    });

    m.def("bullet", [](const std::string& inst, const std::string& a, const std::string& b) {
        auto d = resolve(inst);
        return elem_to_json(bullet(elem_of(d, a), elem_of(d, b))).dump();
    });
    m.def("quad", [](const std::string& inst, const std::string& a, const std::string& x) {
        auto d = resolve(inst);
        return elem_to_json(quad(elem_of(d, a), elem_of(d, x))).dump();
    });
    m.def("inverse", [](const std::string& inst, const std::string& a) {
        auto d = resolve(inst);
        return elem_to_json(jordan_inverse(elem_of(d, a))).dump();
    });
    m.def("is_invertible", [](const std::string& inst, const std::string& a) {
        auto d = resolve(inst);
        return jis_invertible(elem_of(d, a));
    });
    m.def("cone_contains", [](const std::string& inst, const std::string& a) {
        auto d = resolve(inst);
        return cone_contains(elem_of(d, a));
    });

    m.def("transversal", [](const std::string& inst, const std::string& p, const std::string& q) {
        auto d = resolve(inst);
        return transversal(point_of(d, p), point_of(d, q));
    });
    m.def("cyclically_ordered",
          [](const std::string& inst, const std::string& a, const std::string& x,
             const std::string& b) {
              auto d = resolve(inst);
              return cyclically_ordered(point_of(d, a), point_of(d, x), point_of(d, b));
          });
    m.def("cyclically_ordered_full",
          [](const std::string& inst, const std::string& a, const std::string& x,
             const std::string& b) {
              auto d = resolve(inst);
              auto geo = GeometryDescriptor::for_algebra(d);
              return cyclically_ordered(embed(geo, point_of(d, a)), embed(geo, point_of(d, x)),
                                        embed(geo, point_of(d, b)));
          });

    m.def("classify_pair",
          [](const std::string& inst, const std::string& a, const std::string& b) {
              auto d = resolve(inst);
              return std::string(1, image_class_letter(
                                        classify_pair(point_of(d, a), point_of(d, b))));
          });

    m.def("torus_boxes", [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        std::vector<Rational> ra, rb;
        for (const auto& s : a) ra.push_back(parse_rational(s));
        for (const auto& s : b) rb.push_back(parse_rational(s));
        py::list out;
        for (const auto& box : torus_boxes(ra, rb)) {
            py::list sides;
            for (const auto& [lo, hi] : box.sides)
                sides.append(py::make_tuple(lo.get_str(), hi.get_str()));
            out.append(sides);
        }
        return out;
    });

    m.def(
        "check_axioms",
        [](const std::string& inst, const std::string& suite, std::uint64_t seed, long cases,
           long bound) {
            auto d = resolve(inst);
            SampleSpec spec = spec_of(seed, cases, bound);
            AxiomReport rep;
            if (suite == "por") rep = check_ordered_ring_axioms(d.ring(), spec);
            else if (suite == "jordan") rep = check_jordan_axioms(d, spec);
            else if (suite == "poja") rep = check_ordered_algebra_axioms(d, spec);
            else if (suite == "formal-reality") rep = check_formal_reality(d, spec);
            else if (suite == "pco") rep = check_cyclic_order_axioms(d, spec);
            else if (suite == "invariance") rep = check_invariance_and_reversal(d, spec);
            else if (suite == "convexity") rep = check_interval_convexity(d, spec);
            else if (suite == "compression") rep = check_compression(d, spec);
            else throw ConfigError("unknown suite '" + suite + "'");
            return report_dict(rep);
        },
        py::arg("instance"), py::arg("suite"), py::arg("seed") = 1, py::arg("cases") = 200,
        py::arg("bound") = 6);

    m.def(
        "tube_experiment",
        [](const std::string& inst, std::uint64_t seed, long cases, long bound) {
            return report_dict(tube_experiment(resolve(inst), spec_of(seed, cases, bound)));
        },
        py::arg("instance"), py::arg("seed") = 1, py::arg("cases") = 200, py::arg("bound") = 6);

    m.def(
        "spectral_ball",
        [](int n, std::uint64_t seed, long cases, long bound) {
            return report_dict(spectral_ball_check(n, spec_of(seed, cases, bound)));
        },
        py::arg("n"), py::arg("seed") = 1, py::arg("cases") = 200, py::arg("bound") = 6);

    m.def(
        "render_interval",
        [](const std::string& inst, const std::string& a, const std::string& b,
           const std::vector<std::size_t>& axes, const std::string& lo, const std::string& hi,
           long steps) {
            auto d = resolve(inst);
            GridSpec grid;
            for (std::size_t i = 0; i < axes.size(); ++i)
                grid.axes.push_back(GridAxis{parse_rational(lo), parse_rational(hi), steps});
            RenderSpec rs{point_of(d, a), point_of(d, b), axes, AlgebraElem::zero(d), grid};
            RenderResult rr = render_image(rs);
            py::dict out;
            out["svg"] = rr.svg;
            out["csv"] = rr.csv;
            out["members"] = rr.members;
            out["class"] = std::string(1, image_class_letter(rr.cls));
            return out;
        },
        py::arg("instance"), py::arg("a"), py::arg("b"), py::arg("axes"), py::arg("lo") = "-3",
        py::arg("hi") = "3", py::arg("steps") = 20);

    py::register_exception<Error>(m, "JorderError");
}
