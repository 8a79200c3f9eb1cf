// validation.hpp: Acceptance suite: closed-form, oracle and structural checks

#pragma once

#include <string>
#include <vector>

namespace tlsflow::validation {

struct CriterionResult {
    int id{0};
    std::string name;
    bool passed{false};
    double worst_error{0.0};  // criterion-specific figure of merit, see detail
    std::string detail;
};

struct ValidationOptions {
    bool mutate_local_sign{false};  // canary: flips the detuning sign in the local moment generator
    int threads{8};
};

inline constexpr int kCriterionCount = 12;

CriterionResult run_criterion(int id, const ValidationOptions& opts = {});
std::vector<CriterionResult> run_acceptance(const ValidationOptions& opts = {});

// "C07 PASS worst=3.1e-12 oracle equivalence | <detail>"
std::string format_result(const CriterionResult& r);

}  // namespace tlsflow::validation
