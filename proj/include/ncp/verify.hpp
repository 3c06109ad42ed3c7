#pragma once

#include <string>
#include <vector>

namespace ncp {

struct Check {
    std::string id;      // stable identifier, e.g. "separation-coassociative"
    std::string scope;   // what was covered, e.g. "all partitions, <=5 legs"
    bool pass = false;
    std::string witness; // first counterexample, empty when passing
};

struct VerificationReport {
    std::string suite;
    int max_legs = 0;
    std::vector<Check> checks;

    bool all_pass() const;
    std::string text() const;  // one "[PASS]/[FAIL] id - scope" line per check
};

// Suites: axioms, invariants, characters, antipode, series, tables, all.
// Throws UnknownSuite for anything else.
VerificationReport run_suite(const std::string& suite, int max_legs);

std::vector<std::string> suite_names();

} // namespace ncp
