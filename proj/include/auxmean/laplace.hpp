#pragma once

#include <vector>

#include "auxmean/config.hpp"
#include "auxmean/mean_value.hpp"

namespace auxmean {

class EvalCache;

struct LaplaceScanRow {
    double sigma = 0.0;
    double epsilon = 0.0;
    double numeric = 0.0;
    double predicted = 0.0;
    double ratio = 0.0;
    double tail_bound = 0.0;
};

// Which transform is compared: the weighted one against (2 eps)^{-3/2}/(1-2 sigma),
// or the unweighted one against (1/2 eps)(2 pi eps)^{sigma-1/2} Gamma(1/2 - sigma).
enum class LaplaceTarget { Weighted, Unweighted };

struct LaplaceValue {
    double numeric = 0.0;
    double tail_bound = 0.0;
};

/// eps int_{t_0}^{t_N} F(t) e^{-eps t} dt for F linear between samples, in
/// closed form. Samples ascending in t.
double laplace_piecewise_linear(const std::vector<double>& t, const std::vector<double>& F, double epsilon);

/// eps int F e^{-eps t} dt over the stream up to T_max = t.back(), plus a bound
/// on the part beyond T_max obtained from F(t) <= 2 t (main terms at t).
/// Requires eps T_max >= 40.
LaplaceValue laplace_numeric(double sigma, double epsilon, const std::vector<double>& t, const std::vector<double>& F,
                             LaplaceTarget target = LaplaceTarget::Weighted);

/// One row per epsilon (descending grid, sigma < 1/2), each using F on
/// [1, coverage/eps] from a single streaming pass of the mean-value engine.
/// coverage >= 40.
std::vector<LaplaceScanRow> laplace_ratio_scan(double sigma, const std::vector<double>& epsilon_grid,
                                               const RunConfig& config, LaplaceTarget target = LaplaceTarget::Weighted,
                                               EvalCache* cache = nullptr, double coverage = 40.0);

}  // namespace auxmean
