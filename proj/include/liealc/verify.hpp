#pragma once

#include <string>
#include <vector>

namespace liealc {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/**
 * Checks against stored reference data: the E6/E7 alcove
 * tables, the exceptional Weyl words, SU(n) cycles and fixed segments, and
 * permutation coherence across the catalog.
 */
std::vector<CheckResult> run_verification();

}  // namespace liealc
