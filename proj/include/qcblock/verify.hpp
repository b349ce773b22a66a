#pragma once
// Reference suite: reproduces the recorded worked values this library is
// built around, one pass/fail line per check.

#include <iosfwd>
#include <string>
#include <vector>

#include "qcblock/field.hpp"

namespace qcblock {

struct CriterionResult {
    u32 id;
    std::string name;
    bool pass;
    std::string detail;  // measured values on one line
    i64 elapsed_ms;
};

// Runs every check in order and streams one result line each to log.
// threads parallelizes the exhaustive distance enumerations.  only = 0 runs
// the whole suite, otherwise just that check.  mutation_control corrupts one
// built-in recorded constant so the first check must come back FAIL; it
// proves the comparisons can detect a mismatch.
std::vector<CriterionResult> run_reference_suite(std::ostream& log, u32 threads = 1,
                                                 u32 only = 0, bool mutation_control = false);

}  // namespace qcblock
