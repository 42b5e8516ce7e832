// Acceptance gate: runs every criterion and prints one line per result.

#include <cstdio>
#include <iostream>

#include "yao/acceptance.hpp"

int main() {
    bool ok = true;
    try {
        ok = yao::accept::run_suite("all", [](const yao::accept::CriterionResult& r) {
            std::cout << yao::accept::format_line(r) << "\n" << std::flush;
        });
    } catch (const std::exception& e) {
        std::cerr << "acceptance suite aborted: " << e.what() << "\n";
        return 1;
    }
    std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILURES above") << "\n";
    return ok ? 0 : 1;
}
