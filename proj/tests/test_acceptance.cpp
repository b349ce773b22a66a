#include <cstdlib>
#include <iostream>
#include <string>

#include "qcblock/verify.hpp"

int main(int argc, char** argv) {
    qcblock::u32 threads = 1;
    if (argc > 1) threads = static_cast<qcblock::u32>(std::strtoul(argv[1], nullptr, 10));
    std::vector<qcblock::CriterionResult> results =
        qcblock::run_reference_suite(std::cout, threads);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    std::cout << (all ? "all checks passed" : "some checks failed") << "\n";
    return all ? 0 : 1;
}
