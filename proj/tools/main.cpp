// Command line front end: instance declaration, axiom suites, cyclic-order
// queries, affine interval images and the desk-scale experiments.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include "jorder/instances.hpp"
#include "jorder/topology.hpp"
#include "jorder/tube.hpp"

namespace fs = std::filesystem;
using namespace jorder;

namespace {

struct Common {
    std::string config_path;
    std::string out_dir;
    std::optional<Json> config;

    void load() {
        if (!config_path.empty()) config = load_config(config_path);
        if (out_dir.empty()) {
            const char* env = std::getenv("JORDER_OUT_DIR");
            out_dir = env ? env : ".";
        }
    }

    const Json* config_ptr() const { return config ? &*config : nullptr; }
};

int fail_exit(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

// Writes witness files for failed asserted checks; returns count written.
int dump_witnesses(const Common& common, const std::string& tag, const AxiomReport& rep) {
    int written = 0;
    for (const auto& c : rep.checks) {
        if (c.pass || !c.asserted) continue;
        Json doc{{"suite", rep.suite},
                 {"subject", rep.subject},
                 {"check", c.name},
                 {"seed", rep.spec.seed},
                 {"cases", rep.spec.cases},
                 {"witness", c.witness}};
        if (!c.replay.empty()) doc["replay"] = Json::parse(c.replay);
        fs::create_directories(common.out_dir);
        std::string path = common.out_dir + "/witness-" + tag + "-" + c.name + ".json";
        write_text_file(path, doc.dump(2) + "\n");
        std::cerr << "witness written: " << path << "\n";
        ++written;
    }
    return written;
}

GridSpec parse_grid(const std::string& text) {
    GridSpec grid;
    for (const auto& axis : [&] {
             std::vector<std::string> parts;
             std::string cur;
             for (char ch : text) {
                 if (ch == ',') {
                     parts.push_back(cur);
                     cur.clear();
                 } else {
                     cur += ch;
                 }
             }
             parts.push_back(cur);
             return parts;
         }()) {
        auto c1 = axis.find(':');
        auto c2 = axis.rfind(':');
        if (c1 == std::string::npos || c2 == c1)
            throw ConfigError("grid axis must be lo:hi:steps, got '" + axis + "'");
        GridAxis ga;
        ga.lo = parse_rational(axis.substr(0, c1));
        ga.hi = parse_rational(axis.substr(c1 + 1, c2 - c1 - 1));
        ga.steps = std::stol(axis.substr(c2 + 1));
        grid.axes.push_back(std::move(ga));
    }
    return grid;
}

int run_check_axioms(const Common& common, const std::string& instance,
                     std::vector<std::string> suites, const SampleSpec& spec,
                     const std::string& report_path) {
    AlgebraDescriptor d = find_instance(instance, common.config_ptr());
    if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) {
        suites = {"por", "jordan"};
        if (order_flavor(d.ring()) == OrderFlavor::SquareOrderedInversePor) {
            suites.insert(suites.end(), {"poja", "formal-reality", "pco", "invariance",
                                         "convexity", "compression"});
        }
    }

    std::string text;
    bool ok = true;
    for (const auto& s : suites) {
        AxiomReport rep;
        if (s == "por") rep = check_ordered_ring_axioms(d.ring(), spec);
        else if (s == "jordan") rep = check_jordan_axioms(d, spec);
        else if (s == "poja") rep = check_ordered_algebra_axioms(d, spec);
        else if (s == "formal-reality") rep = check_formal_reality(d, spec);
        else if (s == "pco") rep = check_cyclic_order_axioms(d, spec);
        else if (s == "invariance") rep = check_invariance_and_reversal(d, spec);
        else if (s == "convexity") rep = check_interval_convexity(d, spec);
        else if (s == "compression") rep = check_compression(d, spec);
        else throw ConfigError("unknown suite '" + s + "'");
        text += rep.to_text();
        ok = ok && rep.all_pass();
        dump_witnesses(common, instance + "-" + s, rep);
    }
    std::cout << text;
    if (!report_path.empty()) write_text_file(report_path, text);
    return ok ? 0 : 1;
}

int run_topology(const Common& common, const std::string& instance, const SampleSpec& spec,
                 const std::string& report_path) {
    AlgebraDescriptor d = find_instance(instance, common.config_ptr());
    std::string text;
    bool ok = true;

    if (is_dual_extended(d)) {
        auto rep = tangent_fiber_inseparability(dual_base_descriptor(d), spec);
        text += rep.to_text();
        ok = ok && rep.all_pass();
        dump_witnesses(common, instance + "-tangent-fiber", rep);
    }
    if (d.kind() == AlgKind::Sym && d.ring() == RingDescriptor::q() && d.n() <= 3) {
        auto rep = spectral_ball_check(d.n(), spec);
        text += rep.to_text();
        ok = ok && rep.all_pass();
        dump_witnesses(common, instance + "-spectral-ball", rep);
    }
    // separation demo between the origin and 5e
    if (is_ordered(d.ring())) {
        auto catalog = default_interval_catalog(d, spec);
        ChartPoint p = ChartPoint::origin(d);
        ChartPoint q = ChartPoint::finite(jscale(AlgebraElem::unit(d), 5));
        auto pairs = separating_intervals(p, q, catalog, spec);
        text += "suite=separation subject=" + d.name() + " seed=" +
                std::to_string(spec.seed) + " cases=" + std::to_string(spec.cases) +
                " bound=" + std::to_string(spec.bound) + "\n";
        text += "check origin-vs-5e-separated status=" + std::string(pairs.empty() ? "FAIL" : "PASS") +
                " cases=" + std::to_string(catalog.size()) + "\n";
        text += "result=" + std::string(pairs.empty() ? "FAIL" : "PASS") + "\n";
        ok = ok && !pairs.empty();
    }
    std::cout << text;
    if (!report_path.empty()) write_text_file(report_path, text);
    return ok ? 0 : 1;
}

bool replay_cyclicity(const ChartPoint& a, const ChartPoint& x, const ChartPoint& b) {
    bool v = cyclically_ordered(a, x, b);
    return v != cyclically_ordered(x, b, a);
}

int run_query_witness(const std::string& path) {
    Json doc = Json::parse(read_text_file(path));
    if (!doc.contains("replay")) {
        std::cout << "witness has no structured replay data\n";
        return 2;
    }
    const Json& r = doc.at("replay");
    std::string kind = r.at("kind").get<std::string>();
    if (kind == "ring") {
        RingDescriptor ring = ring_desc_from_json(r.at("ring"));
        RingElem a = ring_elem_from_json(ring, r.at("a"));
        std::string op = r.at("op").get<std::string>();
        bool reproduced = false;
        if (op == "square-order")
            reproduced = ring_is_unit(a) && !ring_is_positive(ring_mul(a, a));
        else if (op == "inverse-por")
            reproduced = ring_is_positive(a) && !ring_is_unit(a);
        else
            return fail_exit("unknown ring op '" + op + "'");
        std::cout << op << " violation at a=" << a.str() << ": "
                  << (reproduced ? "reproduced" : "NOT reproduced") << "\n";
        return reproduced ? 0 : 1;
    }
    if (kind == "cyclic-axiom") {
        AlgebraDescriptor d = alg_desc_from_json(r.at("algebra"));
        const Json& pts = r.at("points");
        ChartPoint a = chart_point_from_json(d, pts.at(0));
        ChartPoint x = chart_point_from_json(d, pts.at(1));
        ChartPoint b = chart_point_from_json(d, pts.at(2));
        std::string op = r.at("op").get<std::string>();
        bool reproduced = false;
        if (op == "cyclicity") {
            reproduced = replay_cyclicity(a, x, b);
        } else if (op == "asymmetry") {
            reproduced = cyclically_ordered(a, x, b) && cyclically_ordered(b, x, a);
        } else {
            return fail_exit("unknown cyclic op '" + op + "'");
        }
        std::cout << op << " violation: " << (reproduced ? "reproduced" : "NOT reproduced")
                  << "\n";
        return reproduced ? 0 : 1;
    }
    return fail_exit("unknown replay kind '" + kind + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact partially ordered Jordan algebras and the cyclic order "
                 "of their geometries"};
    app.require_subcommand(1);

    Common common;
    app.add_option("--config", common.config_path, "instance/config document (json)");
    app.add_option("--out", common.out_dir,
                   "output directory for witness files (default: JORDER_OUT_DIR or .)");

    SampleSpec spec;
    std::string instance = "q", report_path;

    auto add_sampler = [&](CLI::App* cmd) {
        cmd->add_option("--seed", spec.seed, "sampler seed");
        cmd->add_option("--cases", spec.cases, "sample count");
        cmd->add_option("--bound", spec.bound, "magnitude bound");
        cmd->add_option("--report", report_path, "write the report to this file");
    };

    // check-axioms
    auto* check = app.add_subcommand("check-axioms", "run axiom suites on an instance");
    std::vector<std::string> suites;
    check->add_option("--instance", instance, "instance alias or config name")->required();
    check->add_option("--suite", suites,
                      "por|jordan|poja|formal-reality|pco|invariance|convexity|compression|all");
    add_sampler(check);

    // query-cyclic
    auto* qc = app.add_subcommand("query-cyclic", "evaluate the ternary cyclic relation");
    std::string triple_text;
    qc->add_option("--instance", instance, "instance alias")->required();
    qc->add_option("--triple", triple_text, "a;x;b (scalar shorthand: a,x,b)");

    // query-transversal
    auto* qt = app.add_subcommand("query-transversal", "test transversality of a pair");
    std::string pair_text;
    qt->add_option("--instance", instance, "instance alias")->required();
    qt->add_option("--pair", pair_text, "p;q")->required();

    // query-witness
    auto* qw = app.add_subcommand("query-witness", "replay a witness file");
    std::string witness_path;
    qw->add_option("file", witness_path, "witness json")->required();

    // interval-image
    auto* img = app.add_subcommand("interval-image", "render an affine interval image");
    std::string img_pair, img_axes = "0", img_grid = "-3:3:20", img_pin, svg_path, csv_path;
    img->add_option("--instance", instance, "instance alias")->required();
    img->add_option("--pair", img_pair, "endpoints a;b")->required();
    img->add_option("--axes", img_axes, "varied coordinate slots, e.g. 0,2");
    img->add_option("--grid", img_grid, "per-axis lo:hi:steps, comma separated");
    img->add_option("--pin", img_pin, "base element for the pinned coordinates");
    img->add_option("--svg", svg_path, "write the region shading");
    img->add_option("--csv", csv_path, "write the membership grid");

    // torus-boxes
    auto* tb = app.add_subcommand("torus-boxes", "affine cubes of a torus interval");
    long tb_n = 2;
    std::string tb_a, tb_b;
    tb->add_option("--n", tb_n, "torus dimension")->required();
    tb->add_option("--a", tb_a, "first endpoint, cube coordinates")->required();
    tb->add_option("--b", tb_b, "second endpoint, cube coordinates")->required();
    tb->add_option("--svg", svg_path, "write the boxes (n = 2)");
    tb->add_option("--csv", csv_path, "write the box list");

    // topology-probe
    auto* topo = app.add_subcommand("topology-probe", "interval topology probes");
    topo->add_option("--instance", instance, "instance alias")->required();
    add_sampler(topo);

    // tube-experiment
    auto* tube = app.add_subcommand("tube-experiment", "tube domain inversion experiment");
    tube->add_option("--instance", instance, "instance alias")->required();
    add_sampler(tube);

    app.add_subcommand("list-instances", "print the built-in instance aliases");

    // global flags (--config/--out) may follow the subcommand name
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        common.load();

        if (app.got_subcommand("list-instances")) {
            for (const auto& [alias, desc] : builtin_instances())
                std::cout << alias << "  " << desc.name() << "\n";
            return 0;
        }
        if (app.got_subcommand(check))
            return run_check_axioms(common, instance, suites, spec, report_path);
        if (app.got_subcommand(qc)) {
            AlgebraDescriptor d = find_instance(instance, common.config_ptr());
            auto pts = parse_point_list(d, triple_text);
            if (pts.size() != 3) return fail_exit("--triple needs exactly three points");
            std::cout << (cyclically_ordered(pts[0], pts[1], pts[2]) ? "true" : "false") << "\n";
            return 0;
        }
        if (app.got_subcommand(qt)) {
            AlgebraDescriptor d = find_instance(instance, common.config_ptr());
            auto pts = parse_point_list(d, pair_text);
            if (pts.size() != 2) return fail_exit("--pair needs exactly two points");
            std::cout << (transversal(pts[0], pts[1]) ? "true" : "false") << "\n";
            return 0;
        }
        if (app.got_subcommand(qw)) return run_query_witness(witness_path);
        if (app.got_subcommand(img)) {
            AlgebraDescriptor d = find_instance(instance, common.config_ptr());
            auto pts = parse_point_list(d, img_pair);
            if (pts.size() != 2) return fail_exit("--pair needs exactly two points");
            RenderSpec rs{pts[0], pts[1], {}, AlgebraElem::zero(d), parse_grid(img_grid)};
            for (const auto& q : parse_rational_list(img_axes))
                rs.axes.push_back(static_cast<std::size_t>(q.get_num().get_si()));
            if (!img_pin.empty()) {
                auto pin = parse_point_list(d, img_pin);
                if (pin.size() != 1 || pin[0].is_infinity())
                    return fail_exit("--pin needs one finite element");
                rs.pin = pin[0].value();
            }
            RenderResult rr = render_image(rs);
            std::cout << "class=" << image_class_letter(rr.cls) << " members=" << rr.members
                      << "\n";
            if (!svg_path.empty()) write_text_file(svg_path, rr.svg);
            if (!csv_path.empty()) write_text_file(csv_path, rr.csv);
            return 0;
        }
        if (app.got_subcommand(tb)) {
            auto a = parse_rational_list(tb_a);
            auto b = parse_rational_list(tb_b);
            if (static_cast<long>(a.size()) != tb_n || static_cast<long>(b.size()) != tb_n)
                return fail_exit("--a/--b need exactly n coordinates");
            auto boxes = torus_boxes(a, b);
            std::cout << "boxes=" << boxes.size() << "\n";
            std::string csv = "box,sides\n";
            for (std::size_t i = 0; i < boxes.size(); ++i) {
                std::cout << "  " << boxes[i].str() << "\n";
                csv += std::to_string(i) + ",\"" + boxes[i].str() + "\"\n";
            }
            if (!svg_path.empty()) write_text_file(svg_path, render_boxes_svg(boxes));
            if (!csv_path.empty()) write_text_file(csv_path, csv);
            return 0;
        }
        if (app.got_subcommand(topo)) return run_topology(common, instance, spec, report_path);
        if (app.got_subcommand(tube)) {
            AlgebraDescriptor d = find_instance(instance, common.config_ptr());
            auto rep = tube_experiment(d, spec);
            std::cout << rep.to_text();
            if (!report_path.empty()) write_text_file(report_path, rep.to_text());
            dump_witnesses(common, instance + "-tube", rep);
            return rep.all_pass() ? 0 : 1;
        }
        return fail_exit("no subcommand");
    } catch (const ConfigError& e) {
        return fail_exit(e.what());
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
