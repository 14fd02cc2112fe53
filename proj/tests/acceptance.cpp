// Runs the nine acceptance criteria at desk level and prints one line each.
// Time budgets live next to each criterion in src/verify.cpp.

#include <iostream>

#include "qcomb/verify.hpp"

int main() {
    bool all = true;
    for (int id = 1; id <= qcomb::criterion_count; ++id) {
        const qcomb::CheckResult r = qcomb::run_criterion(id, qcomb::VerifyOptions{});
        std::cout << qcomb::format_result(r) << std::endl;
        all = all && r.pass;
    }
    std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
    return all ? 0 : 1;
}
