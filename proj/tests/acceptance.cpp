// Acceptance runner: one line per criterion, exit 1 if any fails.

#include <cstring>
#include <iostream>
#include <string>

#include "tlsflow/validation.hpp"

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::stoi(argv[++i]);
    }
    tlsflow::validation::ValidationOptions opts;
    bool ok = true;
    for (int id = 1; id <= tlsflow::validation::kCriterionCount; ++id) {
        if (only != 0 && id != only) continue;
        const auto r = tlsflow::validation::run_criterion(id, opts);
        std::cout << tlsflow::validation::format_result(r) << std::endl;
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}
