#pragma once

/**
 * @file verify.hpp
 * @brief Acceptance harness: re-checks every identity by comparing
 * enumerations against the matrix-product formulas, plus the golden tables.
 */

#include <string>
#include <vector>

#include "qcomb/qpoly.hpp"

namespace qcomb {

enum class Level { Desk, Deep };

struct VerifyOptions {
    Level level = Level::Desk;
    // Generators fed to every matrix-product formula.
    QGen gen = QGen::standard();
};

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    // First failing identity and the input that broke it, or a summary on success.
    std::string detail;
    double millis = 0;
    // Wall-clock budget in milliseconds; exceeded budgets fail at desk level.
    double limit_millis = 0;
    bool timed_out = false;
};

inline constexpr int criterion_count = 9;

CheckResult run_criterion(int id, const VerifyOptions& opts);
std::vector<CheckResult> run_acceptance(const VerifyOptions& opts);

std::string format_result(const CheckResult& r);

// L_q with its lower-left entry replaced by 1; used to prove the harness notices a broken generator.
QGen mutated_generators();

} // namespace qcomb
