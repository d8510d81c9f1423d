#include "auxmean/mean_value.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "auxmean/aux_eval.hpp"
#include "auxmean/cache.hpp"
#include "auxmean/errors.hpp"
#include "auxmean/lemma_oracles.hpp"
#include "auxmean/parallel.hpp"
#include "auxmean/quadrature.hpp"
#include "auxmean/special_functions.hpp"
#include "auxmean/summation.hpp"

namespace auxmean {
namespace {

constexpr int kPanelOrder = 8;
constexpr long kPairBudget = 1500;
// Relative rounding floor charged to every panel.
constexpr double kPanelRounding = 1e-13;

long check_pair_budget(double T) {
    const long n = main_sum_terms(T);
    if (n > kPairBudget) {
        throw BudgetError("s2_value: sqrt(T/2pi) above the pair budget 1500");
    }
    return n;
}

// Precomputed log n and n^{-sigma} for the main sum over a whole run.
class MainSumTable {
public:
    MainSumTable(double sigma, double t_max) {
        const long n = main_sum_terms(t_max);
        log_n_.resize(static_cast<std::size_t>(n) + 1, 0.0);
        coef_.resize(static_cast<std::size_t>(n) + 1, 0.0);
        for (long k = 1; k <= n; ++k) {
            log_n_[k] = std::log(static_cast<double>(k));
            coef_[k] = std::exp(-sigma * log_n_[k]);
        }
    }

    double abs2(double t) const {
        const long n = main_sum_terms(t);
        double re = 0.0;
        double im = 0.0;
        for (long k = 1; k <= n; ++k) {
            const double phase = t * log_n_[k];
            re += coef_[k] * std::cos(phase);
            im -= coef_[k] * std::sin(phase);
        }
        return re * re + im * im;
    }

private:
    std::vector<double> log_n_;
    std::vector<double> coef_;
};

struct PanelResult {
    double value = 0.0;
    double eval_error = 0.0;  // propagated integrand error
    long evals = 0;
};

class PanelIntegrator {
public:
    PanelIntegrator(double sigma, double t_max, bool weighted, const RunConfig& config, Integrand integrand,
                    EvalCache* cache)
        : sigma_(sigma),
          weighted_(weighted),
          config_(config),
          integrand_(integrand),
          cache_(cache),
          table_(sigma, t_max),
          rule_(gauss_legendre(kPanelOrder)) {}

    PanelResult integrate(double a, double b) const {
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        PanelResult r;
        for (int j = 0; j < rule_.order(); ++j) {
            const double t = mid + half * rule_.nodes[j];
            const double w = half * rule_.weights[j] * weight(t);
            if (integrand_ == Integrand::Auxiliary && t <= config_.t_switch) {
                const AuxEval e = eval_aux(cplx(sigma_, t), config_, cache_);
                const double mod = std::abs(e.value);
                r.value += w * mod * mod;
                r.eval_error += w * (2.0 * mod * e.error_bound + e.error_bound * e.error_bound);
                r.evals += e.evaluations > 0 ? 1 : 0;
            } else {
                r.value += w * table_.abs2(t);
                r.evals += 1;
            }
        }
        return r;
    }

private:
    double weight(double t) const { return weighted_ ? std::exp(sigma_ * std::log(t / kTwoPi)) : 1.0; }

    double sigma_;
    bool weighted_;
    const RunConfig& config_;
    Integrand integrand_;
    EvalCache* cache_;
    MainSumTable table_;
    const GaussLegendreRule& rule_;
};

std::vector<double> panel_boundaries(double T_max, const RunConfig& config, const std::vector<double>& stops,
                                     Integrand integrand) {
    std::vector<double> breaks;
    for (long n = 1;; ++n) {
        const double b = kTwoPi * static_cast<double>(n) * static_cast<double>(n);
        if (b >= T_max) {
            break;
        }
        if (b > 1.0) {
            breaks.push_back(b);
        }
    }
    if (integrand == Integrand::Auxiliary && config.t_switch > 1.0 && config.t_switch < T_max) {
        breaks.push_back(config.t_switch);
    }
    for (double s : stops) {
        if (s > 1.0 && s < T_max) {
            breaks.push_back(s);
        }
    }
    breaks.push_back(T_max);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    const double refine = static_cast<double>(std::max(1, config.panel_refinement));
    std::vector<double> bounds{1.0};
    double t = 1.0;
    for (double target : breaks) {
        while (t < target) {
            const double h = panel_width(t) / refine;
            double next = t + h;
            // no sliver panels in front of a breakpoint
            if (next > target - 0.25 * h) {
                next = target;
            }
            bounds.push_back(next);
            t = next;
        }
    }
    return bounds;
}

double decade_of(double t) { return std::floor(std::log10(t)); }

}  // namespace

double panel_width(double t) {
    return std::min(0.25, kPi / (4.0 * std::log(2.0 + std::sqrt(t / kTwoPi))));
}

double s1_closed_form(double sigma, double T, bool weighted) {
    if (!(T >= kTwoPi)) {
        throw DomainError("s1_closed_form: requires T >= 2 pi");
    }
    const long n_max = main_sum_terms(T);
    CompensatedSum acc;
    for (long n = 1; n <= n_max; ++n) {
        const double lower = kTwoPi * static_cast<double>(n) * static_cast<double>(n);
        if (weighted) {
            // (2pi)^{-sigma} n^{-2 sigma} int_{2 pi n^2}^T t^sigma dt
            //   = 2 pi n^2 ((T/2pi n^2)^{sigma+1} - 1)/(sigma+1)
            const double L = std::log(T / lower);
            const double a = sigma + 1.0;
            acc.add(a == 0.0 ? lower * L : lower * std::expm1(a * L) / a);
        } else {
            acc.add(std::exp(-2.0 * sigma * std::log(static_cast<double>(n))) * (T - lower));
        }
    }
    return acc.value();
}

double s2_value(double sigma, double T, bool weighted) {
    if (!(T >= kTwoPi)) {
        throw DomainError("s2_value: requires T >= 2 pi");
    }
    const long n_max = check_pair_budget(T);
    const double scale = weighted ? std::exp(-sigma * std::log(kTwoPi)) : 1.0;
    CompensatedSum acc;
    for (long n = 2; n <= n_max; ++n) {
        const double lower = kTwoPi * static_cast<double>(n) * static_cast<double>(n);
        if (!(lower < T)) {
            continue;
        }
        const double log_n = std::log(static_cast<double>(n));
        for (long m = 1; m < n; ++m) {
            const double lambda = std::log1p(static_cast<double>(n - m) / static_cast<double>(m));
            const double coef = std::exp(-sigma * (log_n + std::log(static_cast<double>(m))));
            double integral;
            if (weighted) {
                integral = scale * osc_integral(lower, T, sigma, lambda);
            } else {
                // (sin(T l) - sin(lower l))/l as a product, exact zero at T = lower
                integral = 2.0 * std::cos(0.5 * (T + lower) * lambda) * std::sin(0.5 * (T - lower) * lambda) / lambda;
            }
            acc.add(2.0 * coef * integral);
        }
    }
    return acc.value();
}

Decomposition decompose(double sigma, double T, bool weighted) {
    Decomposition d;
    d.sigma = sigma;
    d.T = T;
    d.weighted = weighted;
    d.s1 = s1_closed_form(sigma, T, weighted);
    d.s2 = s2_value(sigma, T, weighted);
    return d;
}

CumulativeIntegral cumulative_integral(double sigma, double T_max, bool weighted, const RunConfig& config,
                                       const std::vector<double>& stops, Integrand integrand, EvalCache* cache) {
    if (!(T_max > 1.0)) {
        throw DomainError("cumulative_integral: requires T_max > 1");
    }
    const std::vector<double> bounds = panel_boundaries(T_max, config, stops, integrand);
    const std::size_t n_panels = bounds.size() - 1;
    const PanelIntegrator integrator(sigma, T_max, weighted, config, integrand, cache);

    std::vector<PanelResult> panels(n_panels);
    parallel_for(n_panels, config.thread_budget,
                 [&](std::size_t k) { panels[k] = integrator.integrate(bounds[k], bounds[k + 1]); });

    // Step-halving on the first panel of every decade; the relative
    // disagreement found there is charged to each panel of the decade.
    std::vector<std::size_t> probes;
    for (std::size_t k = 0; k < n_panels; ++k) {
        if (k == 0 || decade_of(bounds[k]) != decade_of(bounds[k - 1])) {
            probes.push_back(k);
        }
    }
    std::vector<PanelResult> halves(probes.size());
    parallel_for(probes.size(), config.thread_budget, [&](std::size_t i) {
        const std::size_t k = probes[i];
        const double mid = 0.5 * (bounds[k] + bounds[k + 1]);
        const PanelResult left = integrator.integrate(bounds[k], mid);
        const PanelResult right = integrator.integrate(mid, bounds[k + 1]);
        halves[i] = {left.value + right.value, left.eval_error + right.eval_error, left.evals + right.evals};
    }, 1);

    std::vector<double> decade_rel(n_panels, 0.0);
    std::vector<long> probe_evals(n_panels, 0);
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const std::size_t k = probes[i];
        const double coarse = panels[k].value;
        const double fine = halves[i].value;
        const double diff = std::abs(fine - coarse);
        const double scale = std::max(std::abs(coarse), std::abs(fine));
        const double allowed = config.quad_rel * scale + panels[k].eval_error + halves[i].eval_error +
                               std::numeric_limits<double>::min();
        if (diff > allowed) {
            throw ConvergenceError("mean value: panel [" + std::to_string(bounds[k]) + ", " +
                                   std::to_string(bounds[k + 1]) + "] failed step-halving verification");
        }
        const double rel = scale > 0.0 ? diff / scale : 0.0;
        const std::size_t stop = i + 1 < probes.size() ? probes[i + 1] : n_panels;
        for (std::size_t j = k; j < stop; ++j) {
            decade_rel[j] = rel;
        }
        probe_evals[k] = halves[i].evals;
    }

    CumulativeIntegral out;
    out.sigma = sigma;
    out.weighted = weighted;
    out.t.reserve(bounds.size());
    out.F.reserve(bounds.size());
    out.quad_error.reserve(bounds.size());
    out.n_evals.reserve(bounds.size());
    out.t.push_back(bounds[0]);
    out.F.push_back(0.0);
    out.quad_error.push_back(0.0);
    out.n_evals.push_back(0);
    CompensatedSum F;
    CompensatedSum err;
    long evals = 0;
    for (std::size_t k = 0; k < n_panels; ++k) {
        const PanelResult& p = panels[k];
        F.add(p.value);
        err.add((decade_rel[k] + kPanelRounding) * std::abs(p.value) + p.eval_error);
        evals += p.evals + probe_evals[k];
        out.t.push_back(bounds[k + 1]);
        out.F.push_back(F.value());
        out.quad_error.push_back(err.value());
        out.n_evals.push_back(evals);
    }
    return out;
}

std::vector<MeanValueSample> integrate_mean(double sigma, const std::vector<double>& T_grid, bool weighted,
                                            const RunConfig& config, EvalCache* cache, Integrand integrand) {
    if (T_grid.empty()) {
        return {};
    }
    if (!std::is_sorted(T_grid.begin(), T_grid.end())) {
        throw DomainError("integrate_mean: T grid must be ascending");
    }
    if (!(T_grid.front() >= kTwoPi)) {
        throw DomainError("integrate_mean: T grid must start at or above 2 pi");
    }
    const CumulativeIntegral F = cumulative_integral(sigma, T_grid.back(), weighted, config, T_grid, integrand, cache);
    std::vector<MeanValueSample> out;
    out.reserve(T_grid.size());
    for (double T : T_grid) {
        const auto it = std::lower_bound(F.t.begin(), F.t.end(), T);
        if (it == F.t.end() || *it != T) {
            throw Error("integrate_mean: internal error, T is not a panel boundary");
        }
        const std::size_t k = static_cast<std::size_t>(it - F.t.begin());
        MeanValueSample s;
        s.sigma = sigma;
        s.T = T;
        s.weighted = weighted;
        s.raw_integral = F.F[k];
        s.value = F.F[k] / T;
        s.quad_error = F.quad_error[k];
        s.n_evals = F.n_evals[k];
        out.push_back(s);
    }
    return out;
}

double decomposition_check(double sigma, double T, bool weighted, const RunConfig& config) {
    check_pair_budget(T);
    const Decomposition d = decompose(sigma, T, weighted);
    const std::vector<MeanValueSample> lhs = integrate_mean(sigma, {T}, weighted, config, nullptr, Integrand::MainSumOnly);
    return std::abs(lhs.front().raw_integral - (d.s1 + d.s2)) / (d.s1 + std::abs(d.s2));
}

}  // namespace auxmean
