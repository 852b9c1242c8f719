#include "jorder/instances.hpp"

#include "jorder/errors.hpp"

namespace jorder {

const std::vector<std::pair<std::string, AlgebraDescriptor>>& builtin_instances() {
    static const std::vector<std::pair<std::string, AlgebraDescriptor>> table = [] {
        auto Q = RingDescriptor::q();
        auto scalar_q = AlgebraDescriptor::scalar(Q);
        std::vector<std::pair<std::string, AlgebraDescriptor>> t;
        t.emplace_back("q", scalar_q);
        t.emplace_back("qq", AlgebraDescriptor::product({scalar_q, scalar_q}));
        t.emplace_back("torus2", AlgebraDescriptor::product({scalar_q, scalar_q}));
        t.emplace_back("torus3", AlgebraDescriptor::product({scalar_q, scalar_q, scalar_q}));
        t.emplace_back("sym2q", AlgebraDescriptor::sym(2, Q));
        t.emplace_back("sym3q", AlgebraDescriptor::sym(3, Q));
        t.emplace_back("spin3q", AlgebraDescriptor::spin(3, Q));
        t.emplace_back("dual-q", dual_extension(scalar_q));
        t.emplace_back("dual-sym2q", dual_extension(AlgebraDescriptor::sym(2, Q)));
        t.emplace_back("zint", AlgebraDescriptor::scalar(RingDescriptor::z_int()));
        t.emplace_back("trivial-n", AlgebraDescriptor::scalar(RingDescriptor::trivial_n_order()));
        return t;
    }();
    return table;
}

AlgebraDescriptor find_instance(const std::string& name, const Json* config) {
    if (config && config->contains("instances")) {
        const Json& insts = config->at("instances");
        if (insts.contains(name)) return alg_desc_from_json(insts.at(name));
    }
    for (const auto& [alias, desc] : builtin_instances())
        if (alias == name) return desc;
    throw ConfigError("unknown instance '" + name + "'");
}

Json load_config(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be an object");
    if (j.contains("instances")) {
        if (!j.at("instances").is_object())
            throw ConfigError("config field 'instances' must be an object");
        for (const auto& [name, desc] : j.at("instances").items())
            alg_desc_from_json(desc); // validate early, with field context
    }
    return j;
}

} // namespace jorder
