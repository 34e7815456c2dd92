// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Tolerances and sample counts are pinned here, independent of verify.toml.

#include <cstdio>
#include <string>
#include <vector>

#include "cfdyn/render.hpp"
#include "cfdyn/verify.hpp"

using namespace cfdyn;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& label, bool ok,
            const std::string& detail = {}) {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
                label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

const SuiteCheck* find_check(const SuiteReport& rep, const std::string& name) {
    for (const auto& c : rep.checks)
        if (c.check == name) return &c;
    return nullptr;
}

std::string first_witness(const SuiteCheck* c) {
    if (c == nullptr) return "check missing from suite report";
    if (c->witnesses.empty()) return {};
    return c->witnesses.front();
}

void report_check(int criterion, const std::string& label, const SuiteReport& rep,
                  const std::string& check_name) {
    const SuiteCheck* c = find_check(rep, check_name);
    bool ok = c != nullptr && c->status == "pass";
    // The determinant check records the computed constant as a witness even
    // on pass; surface it so the sign discrepancy is reported, not hidden.
    report(criterion, label, ok, first_witness(c));
}

void report_suite(int criterion, const std::string& label, const SuiteReport& rep) {
    std::string detail;
    for (const auto& c : rep.checks)
        if (c.status != "pass") {
            detail = c.check + (c.witnesses.empty() ? "" : ": " + c.witnesses.front());
            break;
        }
    report(criterion, label, rep.all_passed(), detail);
}

size_t count_occurrences(const std::string& hay, const std::string& needle) {
    size_t n = 0;
    for (size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

} // namespace

int main() {
    VerifyConfig cfg; // pinned defaults: 10^4 samples, seed 1, eps 1e-9, grid 600
    cfg.samples = 10000;
    cfg.seed = 1;
    cfg.epsilon = 1e-9;
    cfg.grid = 600;

    SuiteReport identities = run_suite("identities", cfg);
    report_check(1, "cross determinant is one constant Gaussian unit", identities,
                 "determinant constancy");
    report_check(2, "remainder product identity residual < 1e-9 for n <= 15", identities,
                 "remainder product identity");
    report_check(3, "convergence with |q_n| -> infinity within 60 steps", identities,
                 "convergent convergence");

    report_suite(4, "partition image rows and diamond cover are region-equal",
                 run_suite("partition", cfg));
    report_suite(5, "hat-Z equals Z, D is F-invariant, preimage branch unique",
                 run_suite("bijectivity", cfg));
    report_suite(6, "psi stabilizes at round 4 and matches the closed forms",
                 run_suite("psi", cfg));
    report_suite(7, "all seeded orbits enter V and stay in psi",
                 run_suite("trapping", cfg));
    report_check(8, "diamond choice stays in the diamond within the step budget",
                 identities, "diamond choice sanity");

    std::string partition1 = render_figure(Figure::Partition);
    std::string partition2 = render_figure(Figure::Partition);
    std::string psi1 = render_figure(Figure::Psi);
    std::string psi2 = render_figure(Figure::Psi);
    size_t cells = count_occurrences(partition1, "class=\"cell\"");
    bool render_ok = partition1 == partition2 && psi1 == psi2 && cells == 40;
    report(9, "renders are byte-identical with exactly 40 partition cells", render_ok,
           "cells=" + std::to_string(cells));

    return g_failures == 0 ? 0 : 1;
}
