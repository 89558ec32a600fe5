#pragma once

#include <map>

#include "ksl/catalog.hpp"
#include "ksl/classify.hpp"
#include "ksl/report.hpp"

namespace ksl {

/// One constructible family instance: a semigroup with involution and measure
/// plus a validated descriptor for the matching integral law.
struct SweepInstance {
    std::string name;
    std::string semigroup_name;
    FiniteSemigroup S;
    InvolutiveAutomorphism sigma;
    DiscreteMeasure mu;
    FamilyDescriptor descriptor;
    EquationId eq;  // KSSub or KSAdd
};

/// Deterministic parameter sweep covering every family with at least 36
/// instances each (>= 500 total), parameters drawn from fixed grids that
/// avoid the excluded values.
std::vector<SweepInstance> family_sweep();

struct CheckRecord {
    std::string suite;
    std::string name;
    double value = 0.0;
    bool pass = false;
    std::string detail;
};

struct RunReport {
    std::string command;
    std::map<std::string, std::string> inputs;
    std::vector<CheckRecord> checks;
    int exit_status = 0;
};

struct SuiteConfig {
    std::string suite = "all";  // all | t36 | t44 | prop31 | lemmas
    ToleranceProfile tol;
};

RunReport run_verification_suite(const SuiteConfig& config);
JsonValue report_to_json(const RunReport& report);

}  // namespace ksl
