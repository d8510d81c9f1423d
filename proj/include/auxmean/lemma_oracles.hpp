#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace auxmean {

// One bound or growth-rate check. `inputs` is a flat "k=v;k=v" record.
struct BoundCheck {
    std::string lemma;
    std::string inputs;
    double lhs = 0.0;
    double rhs_bound = 0.0;
    double ratio = 0.0;
};

/// int_a^b t^alpha cos(beta t) dt by adaptive Gauss-Kronrod, one initial
/// piece per half period. Absolute error <= 1e-10 (1 + |value|).
double osc_integral(double a, double b, double alpha, double beta);

/// |int_a^b t^alpha cos(beta t) dt| against 3/|beta| max(a^alpha, b^alpha).
BoundCheck lemma1_check(double a, double b, double alpha, double beta);

/// `count` seeded random tuples a, b in (0.1, 100), alpha in (-3, 3),
/// |beta| in (0.01, 50).
std::vector<BoundCheck> lemma1_sweep(std::uint64_t seed, long count);

/// sum_{n <= x} n^{-2 sigma} by direct summation.
double power_sum_partial(double x, double sigma);

/// Main terms of the partial-sum asymptotic: x^{1-2s}/(1-2s) for s <= 0,
/// zeta(2s) + x^{1-2s}/(1-2s) for s > 0, s != 1/2, log x + gamma for s = 1/2.
double euler_asymptotic(double x, double sigma);

/// (partial - asymptotic) x^{2 sigma} (or (partial - log x - gamma) x when
/// sigma = 1/2), with the partial sum carried in binary128 so the scaled
/// residual keeps its digits when x^{2 sigma} is large.
double euler_scaled_residual(double x, double sigma);

/// lhs = partial sum, rhs_bound = euler_asymptotic, ratio = the scaled
/// residual (not a quotient).
BoundCheck euler_check(double x, double sigma);

enum class DoubleSumVariant { Lemma2, Lemma3 };

/// Exact double sum over 1 <= m < n <= x against the growth function of the
/// chosen lemma (x^2 log x; or x^{2-2s} log x, log^2 x, 1 by case).
/// Budget: x <= 3000.
BoundCheck double_sum_growth(double x, double sigma, DoubleSumVariant variant);

/// Boundedness on a geometric grid: every value finite and the largest |v|
/// over the second half of the grid at most growth_factor times the largest
/// over the first half.
bool bounded_on_grid(const std::vector<double>& values, double growth_factor = 2.0);

}  // namespace auxmean
