#pragma once

#include <vector>

#include "auxmean/config.hpp"

namespace auxmean {

class EvalCache;

// One value of (1/T) int_1^T |R(sigma+it)|^2 w(t) dt with w = (t/2pi)^sigma
// (weighted) or w = 1.
struct MeanValueSample {
    double sigma = 0.0;
    double T = 0.0;
    bool weighted = true;
    double value = 0.0;         // raw_integral / T
    double raw_integral = 0.0;  // F(T)
    double quad_error = 0.0;
    long n_evals = 0;
};

// int_1^T |S(t)|^2 w(t) dt split into the diagonal part s1 and the
// off-diagonal oscillatory part s2.
struct Decomposition {
    double s1 = 0.0;
    double s2 = 0.0;
    double sigma = 0.0;
    double T = 0.0;
    bool weighted = true;
};

// What the engine squares: the auxiliary function itself (dispatching on
// t_switch) or the bare main sum S(t).
enum class Integrand { Auxiliary, MainSumOnly };

/// min(0.25, pi / (4 log(2 + sqrt(t/2pi)))): at least eight panels per period
/// of the fastest term in |S(t)|^2.
double panel_width(double t);

/// sum_{n <= sqrt(T/2pi)} n^{-2 sigma} int_{2 pi n^2}^T w(t) dt, exact.
double s1_closed_form(double sigma, double T, bool weighted);

/// 2 sum_{m < n <= sqrt(T/2pi)} (nm)^{-sigma} int_{2 pi n^2}^T w(t) cos(t log(n/m)) dt.
/// Unweighted by the sine antiderivative; weighted by adaptive quadrature per
/// pair. Budget sqrt(T/2pi) <= 1500.
double s2_value(double sigma, double T, bool weighted);

Decomposition decompose(double sigma, double T, bool weighted);

// F(t) = int_1^t |.|^2 w at every panel boundary, ascending from t = 1.
struct CumulativeIntegral {
    double sigma = 0.0;
    bool weighted = true;
    std::vector<double> t;
    std::vector<double> F;
    std::vector<double> quad_error;  // cumulative error estimate at each boundary
    std::vector<long> n_evals;       // cumulative integrand evaluations
};

/// Single streaming pass over [1, T_max]. Panel boundaries include every
/// 2 pi n^2, t_switch (Auxiliary integrand) and each of `stops`. Panels are
/// evaluated on config.thread_budget workers and folded in ascending order.
CumulativeIntegral cumulative_integral(double sigma, double T_max, bool weighted, const RunConfig& config,
                                       const std::vector<double>& stops = {},
                                       Integrand integrand = Integrand::Auxiliary, EvalCache* cache = nullptr);

/// Samples at each T of an ascending grid with min >= 2 pi.
std::vector<MeanValueSample> integrate_mean(double sigma, const std::vector<double>& T_grid, bool weighted,
                                            const RunConfig& config, EvalCache* cache = nullptr,
                                            Integrand integrand = Integrand::Auxiliary);

/// |int_1^T |S|^2 w - (s1 + s2)| / (s1 + |s2|), integral over the main sum only.
double decomposition_check(double sigma, double T, bool weighted, const RunConfig& config = {});

}  // namespace auxmean
