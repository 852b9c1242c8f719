#include "jorder/report.hpp"

#include <sstream>

namespace jorder {

std::string AxiomReport::to_text() const {
    std::ostringstream os;
    os << "suite=" << suite << " subject=" << subject << " seed=" << spec.seed
       << " cases=" << spec.cases << " bound=" << spec.bound << "\n";
    for (const auto& c : checks) {
        os << "check " << c.name << " status=" << (c.pass ? "PASS" : "FAIL")
           << " cases=" << c.cases;
        if (!c.asserted) os << " mode=exploratory";
        if (!c.pass) os << " witness=" << c.witness;
        os << "\n";
    }
    os << "result=" << (all_pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

} // namespace jorder
