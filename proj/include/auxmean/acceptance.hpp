#pragma once

#include <string>
#include <vector>

#include "auxmean/config.hpp"

namespace auxmean {

class EvalCache;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs one acceptance criterion (1..9). Tolerances are fixed in the
/// implementation; `config` supplies thread budget and evaluation tolerances.
CriterionResult run_criterion(int id, const RunConfig& config, EvalCache* cache = nullptr);

/// Criteria 1..9 in order, sharing `cache` where evaluations repeat.
std::vector<CriterionResult> run_acceptance(const RunConfig& config, EvalCache* cache = nullptr);

}  // namespace auxmean
