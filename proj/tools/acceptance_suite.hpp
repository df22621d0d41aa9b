#pragma once

// Acceptance criteria, shared by the acceptance test binary and `kronwebs selftest`.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "kronwebs/io.hpp"

namespace kronwebs::acceptance {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
    io::json data;          // deterministic for a given seed
    double seconds = 0;     // wall time, kept out of the report
};

// Runs criteria 1-9, then reruns them for the determinism check (10).
std::vector<CriterionResult> run_all(std::uint64_t seed, std::ostream* progress = nullptr);
std::vector<CriterionResult> run_criteria(std::uint64_t seed, std::ostream* progress = nullptr);

// Sorted JSON without timings.
io::json report(const std::vector<CriterionResult>& results, std::uint64_t seed);
// One "PASS|FAIL <id> <name>: <detail>" line per criterion.
void print_table(std::ostream& out, const std::vector<CriterionResult>& results);
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace kronwebs::acceptance
