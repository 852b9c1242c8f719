#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

namespace jorder {

/// Reproducible sampling plan: everything an axiom checker draws is a pure
/// function of (seed, cases, bound).
struct SampleSpec {
    std::uint64_t seed = 1;
    long cases = 1000;
    long bound = 10; // magnitude bound on sampled numerators / denominators
};

struct CheckResult {
    std::string name;
    bool pass = true;
    long cases = 0;      // witnesses actually evaluated
    std::string witness; // human-readable counterexample, empty on PASS
    bool asserted = true; // informational checks don't gate exit codes
    std::string replay;  // machine-readable witness for the query tools
};

/// Outcome of one axiom suite over one instance. Serializes to structured
/// text records; deterministic for a fixed SampleSpec.
struct AxiomReport {
    std::string suite;
    std::string subject;
    SampleSpec spec;
    // deque: references returned by add() stay valid while checks accumulate
    std::deque<CheckResult> checks;

    CheckResult& add(const std::string& name, bool asserted = true) {
        checks.push_back(CheckResult{name, true, 0, "", asserted, ""});
        return checks.back();
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (c.asserted && !c.pass) return false;
        return true;
    }

    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::string to_text() const;
};

/// Marks a check failed, keeping only the first witness.
inline void fail_check(CheckResult& c, const std::string& witness,
                       const std::string& replay = "") {
    if (c.pass) {
        c.pass = false;
        c.witness = witness;
        c.replay = replay;
    }
}

} // namespace jorder
