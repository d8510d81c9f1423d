#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace auxmean {

// Which constant the sigma = 1/2 weighted predictor uses for its (T/2pi)^{1/2}
// term. The two published forms differ by 2/3.
enum class HalfLineConstant { Derived, Stated };

// The full determinism contract for a run: every numeric output is a function
// of these fields alone (thread_budget and cache_path never change values).
struct RunConfig {
    std::vector<double> sigma_list;
    std::vector<double> t_grid;        // ordinates for `eval`
    std::vector<double> T_grid;        // upper limits for `meanvalue`
    std::vector<double> epsilon_grid;  // Laplace parameters, descending
    bool weighted = true;

    double quad_rel = 1e-10;        // adaptive real-line quadratures
    double special_fn_abs = 1e-11;  // contour step-halving tolerance
    double t_switch = 500.0;        // DirectContour for t <= t_switch, MainSum above
    int thread_budget = 1;
    std::optional<std::string> cache_path;
    std::uint64_t seed = 20240601;
    long lemma_samples = 1000;
    HalfLineConstant half_line_constant = HalfLineConstant::Derived;
    // Multiplies the number of panels in the mean-value integrator; only used
    // by refinement checks.
    int panel_refinement = 1;
};

}  // namespace auxmean
