#pragma once

// The verification suites behind `yao verify` and the acceptance test
// binary: eleven numbered criteria covering degrees, edges, cliques and the
// structural graph invariants, each with pinned thresholds.

#include <functional>
#include <string>
#include <vector>

namespace yao::accept {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail; // measured values / first failure
    double seconds = 0.0;
};

std::vector<int> suite_criteria(const std::string& suite); // degrees|edges|cliques|all
CriterionResult run_criterion(int id);

// Runs a suite, streaming one "[PASS]/[FAIL] criterion N ..." line per
// criterion through `emit`. Returns true iff everything passed.
bool run_suite(const std::string& suite, const std::function<void(const CriterionResult&)>& emit);

std::string format_line(const CriterionResult& r);

} // namespace yao::accept
