// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include "ncp/combinatorics.hpp"
#include "ncp/invariants.hpp"
#include "ncp/rational.hpp"
#include "ncp/series.hpp"
#include "ncp/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace ncp;

namespace {

int failures = 0;

void report(int number, const std::string& label, double limit_seconds,
            const std::function<bool(std::string&)>& body) {
    namespace ch = std::chrono;
    std::string note;
    bool ok = false;
    auto t0 = ch::steady_clock::now();
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        note = e.what();
    }
    double elapsed = ch::duration<double>(ch::steady_clock::now() - t0).count();
    if (ok && limit_seconds > 0 && elapsed >= limit_seconds) {
        ok = false;
        note = "time limit " + std::to_string(limit_seconds) + "s exceeded";
    }
    if (!ok) ++failures;
    std::printf("criterion %2d [%s] %s (%.2fs)%s%s\n", number, ok ? "PASS" : "FAIL",
                label.c_str(), elapsed, note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
}

const VerificationReport& axioms5() {
    static VerificationReport r = run_suite("axioms", 5);
    return r;
}
const VerificationReport& invariants6() {
    static VerificationReport r = run_suite("invariants", 6);
    return r;
}
const VerificationReport& characters5() {
    static VerificationReport r = run_suite("characters", 5);
    return r;
}
const VerificationReport& antipode5() {
    static VerificationReport r = run_suite("antipode", 5);
    return r;
}
const VerificationReport& series5() {
    static VerificationReport r = run_suite("series", 5);
    return r;
}
const VerificationReport& tables5() {
    static VerificationReport r = run_suite("tables", 5);
    return r;
}

bool require_checks(const VerificationReport& report, const std::vector<std::string>& ids,
                    std::string& note) {
    for (const auto& id : ids) {
        bool found = false;
        for (const auto& c : report.checks) {
            if (c.id != id) continue;
            found = true;
            if (!c.pass) {
                note = id + ": " + c.witness;
                return false;
            }
        }
        if (!found) {
            note = "missing check " + id;
            return false;
        }
    }
    return true;
}

bool require_all(const VerificationReport& report, std::string& note) {
    for (const auto& c : report.checks)
        if (!c.pass) {
            note = c.id + ": " + c.witness;
            return false;
        }
    return true;
}

} // namespace

int main() {
    report(1, "partition counts are the Catalan numbers, 0 to 12 legs", 5.0,
           [](std::string& note) {
               std::vector<long> expect{1,    1,    2,     5,     14,    42,    132,
                                        429,  1430, 4862,  16796, 58786, 208012};
               for (int n = 0; n <= 12; ++n) {
                   long count = 0;
                   visit_ncp(n, [&](const NoncrossingPartition&) { ++count; });
                   if (count != expect[n]) {
                       note = "n=" + std::to_string(n) + " gave " + std::to_string(count);
                       return false;
                   }
               }
               return true;
           });

    report(2, "golden table of six values per fixed partition", 10.0,
           [](std::string& note) { return require_checks(tables5(), {"golden-table"}, note); });

    report(3, "bialgebra axioms and cointeraction on small partitions", 30.0,
           [](std::string& note) { return require_all(axioms5(), note); });

    report(4, "universal invariant: three algorithms and special values", 0,
           [](std::string& note) {
               return require_checks(invariants6(),
                                     {"phi-triple-agreement", "phi-special-values"}, note);
           });

    report(5, "antipode expansions, convolution law, and involutivity", 0,
           [](std::string& note) {
               return require_checks(antipode5(),
                                     {"antipode-ladder-expansions", "antipode-convolution",
                                      "antipode-involution"},
                                     note);
           });

    report(6, "series inversion: closed form equals the oracle", 0,
           [](std::string& note) {
               return require_checks(series5(),
                                     {"invert-oracle-roundtrip", "invert-two-routes",
                                      "invert-catalan-signs", "invert-symbolic-patterns"},
                                     note);
           });

    report(7, "multinomial assembly of the singleton coproduct", 0,
           [](std::string& note) {
               return require_checks(series5(), {"faadibruno-agreement"}, note);
           });

    report(8, "surjective coloration table, closed forms, zero support", 0,
           [](std::string& note) {
               if (a_table(10, 10)[5][8] != 172168) {
                   note = "a(6,9) mismatch";
                   return false;
               }
               return require_checks(
                   tables5(), {"a-table-frozen", "a-closed-forms", "a-zero-support"}, note);
           });

    report(9, "ladder polynomials by matrix, table, and invariant routes", 0,
           [](std::string& note) {
               return require_checks(tables5(), {"ladder-triple-route", "ladder-frozen"},
                                     note);
           });

    report(10, "exact large ladder values at 29 singletons", 30.0,
           [](std::string& note) {
               if (!require_checks(tables5(), {"lambda-ladder-frozen", "lambda-ladder-29"},
                                   note))
                   return false;
               Rational lam = lambda_ncp_ladder(29);
               if (lam != parse_rational("-37449570182565026/37182145")) {
                   note = "ladder character value mismatch";
                   return false;
               }
               auto p29 = ladder_polynomial(29).to_basis(PolyBasis::monomial);
               if (p29.coefficient(29) != 1 ||
                   p29.coefficient(28) != parse_rational("-6897956948587/80313433200") ||
                   p29.coefficient(2) !=
                       parse_rational("-14277306976985617719653/2679791554440") ||
                   p29.coefficient(1) != lam) {
                   note = "P_29 coefficient mismatch";
                   return false;
               }
               return true;
           });

    report(11, "zero threshold and explicit witness colorings", 0,
           [](std::string& note) { return require_checks(tables5(), {"zero-threshold"}, note); });

    report(12, "character convolution inverses and scaling laws", 0,
           [](std::string& note) {
               return require_checks(characters5(),
                                     {"fusion-inverse-lambda0", "fusion-inverse-lambda",
                                      "fusion-inverse-strict", "mu-ncp-involution",
                                      "mu-base-sum", "gamma-laws", "mu-base-catalan"},
                                     note);
           });

    report(13, "extension invariants: values, duality, character actions", 0,
           [](std::string& note) {
               return require_checks(invariants6(),
                                     {"extension-intro-values", "extension-duality",
                                      "action-weak", "action-strict", "action-phi-zero"},
                                     note);
           });

    if (failures == 0) {
        std::printf("acceptance: 13/13 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d/13 criteria FAILED\n", failures);
    return 1;
}
