#include "auxmean/laplace.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "auxmean/errors.hpp"
#include "auxmean/predictors.hpp"
#include "auxmean/special_functions.hpp"
#include "auxmean/summation.hpp"

namespace auxmean {
namespace {

constexpr double kCoverage = 40.0;

double tail_bound(double sigma, double epsilon, double T_max, LaplaceTarget target) {
    const Prediction p = predict(sigma, target == LaplaceTarget::Weighted);
    // F(t) <= 2 t sum |c| (t/2pi)^p, integrated against eps e^{-eps t} on [T_max, inf)
    double bound = 0.0;
    for (const MainTerm& m : p.main_terms) {
        if (m.log_power != 0) {
            throw DomainError("laplace tail: logarithmic main terms are not supported");
        }
        const double a = 2.0 + m.power;
        const double upper = boost::math::tgamma(a, epsilon * T_max);
        bound += 2.0 * std::abs(m.coefficient) * std::pow(kTwoPi, -m.power) * upper * std::pow(epsilon, 1.0 - a);
    }
    return bound;
}

}  // namespace

double laplace_piecewise_linear(const std::vector<double>& t, const std::vector<double>& F, double epsilon) {
    if (t.size() != F.size()) {
        throw DomainError("laplace: sample vectors differ in length");
    }
    if (t.size() < 2) {
        return 0.0;
    }
    // Stieltjes form: sum over segments of slope * int e^{-eps t}, plus the
    // boundary terms of the integration by parts
    CompensatedSum acc;
    acc.add(F.front() * std::exp(-epsilon * t.front()));
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
        const double h = t[k + 1] - t[k];
        if (!(h > 0.0)) {
            throw DomainError("laplace: sample abscissae must be strictly ascending");
        }
        const double slope = (F[k + 1] - F[k]) / h;
        acc.add(-slope * std::exp(-epsilon * t[k]) * std::expm1(-epsilon * h) / epsilon);
    }
    acc.add(-F.back() * std::exp(-epsilon * t.back()));
    return acc.value();
}

LaplaceValue laplace_numeric(double sigma, double epsilon, const std::vector<double>& t, const std::vector<double>& F,
                             LaplaceTarget target) {
    if (!(epsilon > 0.0)) {
        throw DomainError("laplace_numeric: requires epsilon > 0");
    }
    if (t.empty() || !(epsilon * t.back() >= kCoverage)) {
        throw DomainError("laplace_numeric: samples must reach T_max with eps * T_max >= 40");
    }
    LaplaceValue v;
    v.numeric = laplace_piecewise_linear(t, F, epsilon);
    v.tail_bound = tail_bound(sigma, epsilon, t.back(), target);
    return v;
}

std::vector<LaplaceScanRow> laplace_ratio_scan(double sigma, const std::vector<double>& epsilon_grid,
                                               const RunConfig& config, LaplaceTarget target, EvalCache* cache,
                                               double coverage) {
    if (!(coverage >= kCoverage)) {
        throw DomainError("laplace_ratio_scan: coverage eps * T_max must be at least 40");
    }
    if (!(sigma < 0.5)) {
        throw DomainError("laplace_ratio_scan: requires sigma < 1/2");
    }
    if (epsilon_grid.empty()) {
        return {};
    }
    if (!std::is_sorted(epsilon_grid.begin(), epsilon_grid.end(), std::greater<>())) {
        throw DomainError("laplace_ratio_scan: epsilon grid must be descending");
    }
    std::vector<double> stops;
    for (double eps : epsilon_grid) {
        if (!(eps > 0.0) || !(coverage / eps > 1.0)) {
            throw DomainError("laplace_ratio_scan: epsilon must lie in (0, coverage)");
        }
        stops.push_back(coverage / eps);
    }
    const bool weighted = target == LaplaceTarget::Weighted;
    const CumulativeIntegral F =
        cumulative_integral(sigma, stops.back(), weighted, config, stops, Integrand::Auxiliary, cache);

    std::vector<LaplaceScanRow> rows;
    for (std::size_t i = 0; i < epsilon_grid.size(); ++i) {
        const double eps = epsilon_grid[i];
        const auto it = std::lower_bound(F.t.begin(), F.t.end(), stops[i]);
        if (it == F.t.end() || *it != stops[i]) {
            throw Error("laplace_ratio_scan: internal error, T_max is not a panel boundary");
        }
        const std::size_t n = static_cast<std::size_t>(it - F.t.begin()) + 1;
        const std::vector<double> t(F.t.begin(), F.t.begin() + static_cast<long>(n));
        const std::vector<double> f(F.F.begin(), F.F.begin() + static_cast<long>(n));
        const LaplaceValue v = laplace_numeric(sigma, eps, t, f, target);
        LaplaceScanRow r;
        r.sigma = sigma;
        r.epsilon = eps;
        r.numeric = v.numeric;
        r.tail_bound = v.tail_bound;
        r.predicted = weighted ? predict_laplace_weighted(sigma, eps) : predict_laplace_unweighted(sigma, eps);
        r.ratio = r.numeric / r.predicted;
        rows.push_back(r);
    }
    return rows;
}

}  // namespace auxmean
