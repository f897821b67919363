#pragma once

// Named verification suites. Each check carries a stable identity name and a
// pass flag; reports are deterministic for a fixed configuration and seed.

#include "zlkb/charge.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace zlkb {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool ok() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    nlohmann::json to_json() const;
    std::string text() const;
};

struct VerifyOptions {
    int n = 2;
    int samples = 100;      // sample count for property suites
    int random_words = 50;  // randomized identification checks
    std::uint64_t seed = 7;
    std::string charge_file = "default";
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts);

SuiteReport verify_zigzag(const VerifyOptions&);        // dimension table + associativity
SuiteReport verify_braid_relations(const VerifyOptions&);
SuiteReport verify_action_table(const VerifyOptions&);  // seven-case twist table
SuiteReport verify_homgamma(const VerifyOptions&);
SuiteReport verify_gammalkb(const VerifyOptions&);
SuiteReport verify_mgamma(const VerifyOptions&);
SuiteReport verify_condgamma(const VerifyOptions&);
SuiteReport verify_alphalemma(const VerifyOptions&);
SuiteReport verify_identification(const VerifyOptions&);
SuiteReport verify_perm(const VerifyOptions&);
SuiteReport verify_extriang(const VerifyOptions&);
SuiteReport verify_psi(const VerifyOptions&);
SuiteReport verify_k0(const VerifyOptions&);
SuiteReport verify_hn_oracle(const VerifyOptions&);

} // namespace zlkb
