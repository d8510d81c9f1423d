#include "auxmean/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#include "auxmean/aux_eval.hpp"
#include "auxmean/cache.hpp"
#include "auxmean/errors.hpp"
#include "auxmean/laplace.hpp"
#include "auxmean/lemma_oracles.hpp"
#include "auxmean/mean_value.hpp"
#include "auxmean/predictors.hpp"
#include "auxmean/report.hpp"
#include "auxmean/special_functions.hpp"

namespace auxmean {
namespace {

std::string fmt(const char* format, double a) {
    char buf[96];
    std::snprintf(buf, sizeof buf, format, a);
    return buf;
}

std::string join(const std::vector<double>& v, const char* format = "%.4g") {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += fmt(format, v[i]);
    }
    return out + "]";
}

bool non_increasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] > v[i - 1]) {
            return false;
        }
    }
    return true;
}

bool all_finite(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

std::vector<double> two_pi_times(std::initializer_list<double> ks) {
    std::vector<double> out;
    for (double k : ks) {
        out.push_back(kTwoPi * k);
    }
    return out;
}

// 1. S1 + S2 against the integral of |S|^2 w, 24 cases, under a minute.
CriterionResult decomposition_exactness(const RunConfig& config, EvalCache*) {
    CriterionResult r;
    r.name = "decomposition exactness";
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double sigma : {-1.0, 0.0, 0.25, 0.5, 1.0, 2.0}) {
        for (double T : two_pi_times({100.0, 400.0})) {
            for (bool weighted : {true, false}) {
                worst = std::max(worst, decomposition_check(sigma, T, weighted, config));
            }
        }
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = worst <= 1e-6 && elapsed <= 60.0;
    r.detail = "max relative discrepancy " + fmt("%.3e", worst) + " (<= 1e-6); " + fmt("%.1f", elapsed) + " s (<= 60)";
    return r;
}

// 2. Weighted sigma = 0 against (2/3)(T/2pi)^{1/2}.
CriterionResult weighted_sigma_zero(const RunConfig& config, EvalCache* cache) {
    CriterionResult r;
    r.name = "weighted mean sigma=0";
    const auto start = std::chrono::steady_clock::now();
    const std::vector<double> grid = two_pi_times({1e3, 4e3, 1e4});
    const auto samples = integrate_mean(0.0, grid, true, config, cache);
    const Prediction p = predict_weighted(0.0);
    std::vector<double> scaled;
    for (const auto& s : samples) {
        scaled.push_back(std::abs(s.value - p.evaluate(s.T)) * std::pow(s.T, -0.25));
    }
    const double last_main = p.evaluate(grid.back());
    const double rel = std::abs(samples.back().value - last_main) / last_main;
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = all_finite(scaled) && non_increasing(scaled) && rel <= 0.05 && elapsed <= 300.0;
    r.detail = "scaled residuals " + join(scaled) + " non-increasing; value " + fmt("%.6f", samples.back().value) +
               " vs " + fmt("%.6f", last_main) + " rel " + fmt("%.4f", rel) + " (<= 0.05); " + fmt("%.1f", elapsed) +
               " s (<= 300)";
    return r;
}

// 3. Least-squares c in value - (1/3) u^{1/2} log u = c u^{1/2}, u = T/2pi.
CriterionResult half_line_constant_fit(const RunConfig& config, EvalCache* cache) {
    CriterionResult r;
    r.name = "sigma=1/2 constant discrimination";
    std::vector<double> grid;
    for (int k = 0; k <= 10; ++k) {
        grid.push_back(kTwoPi * std::pow(10.0, 3.0 + k / 10.0));
    }
    const auto samples = integrate_mean(0.5, grid, true, config, cache);
    double num = 0.0;
    double den = 0.0;
    for (const auto& s : samples) {
        const double u = s.T / kTwoPi;
        const double residual = s.value - std::sqrt(u) * std::log(u) / 3.0;
        num += residual * std::sqrt(u);
        den += u;
    }
    const double c = num / den;
    const double derived = half_line_constant(HalfLineConstant::Derived);
    const double stated = half_line_constant(HalfLineConstant::Stated);
    r.passed = std::abs(c - derived) < 0.15;
    r.detail = "fitted c " + fmt("%.5f", c) + "; derived " + fmt("%.5f", derived) + " distance " +
               fmt("%.4f", std::abs(c - derived)) + " (< 0.15); stated " + fmt("%.5f", stated) + " distance " +
               fmt("%.4f", std::abs(c - stated));
    return r;
}

// 4. Unweighted sigma = 2: |value - pi^4/90| <= 10/T.
CriterionResult unweighted_sigma_two(const RunConfig& config, EvalCache* cache) {
    CriterionResult r;
    r.name = "unweighted mean sigma=2";
    const std::vector<double> grid = two_pi_times({1e3, 2e3, 4e3, 1e4});
    const auto samples = integrate_mean(2.0, grid, false, config, cache);
    const double zeta4 = std::pow(kPi, 4) / 90.0;
    std::vector<double> scaled;
    bool ok = true;
    for (const auto& s : samples) {
        const double dev = std::abs(s.value - zeta4);
        scaled.push_back(dev * s.T);
        ok = ok && dev <= 10.0 / s.T;
    }
    r.passed = ok;
    r.detail = "|value - pi^4/90| * T " + join(scaled) + " (each <= 10)";
    return r;
}

// 5. Unweighted sigma = 1/2, residual scaled by T^{1/4}/sqrt(log T).
CriterionResult unweighted_sigma_half(const RunConfig& config, EvalCache* cache) {
    CriterionResult r;
    r.name = "unweighted mean sigma=1/2";
    const std::vector<double> grid = two_pi_times({1e3, 2e3, 4e3, 1e4});
    const auto samples = integrate_mean(0.5, grid, false, config, cache);
    const Prediction p = predict_unweighted(0.5);
    std::vector<double> scaled;
    for (const auto& s : samples) {
        scaled.push_back((s.value - p.evaluate(s.T)) / p.error_scale(s.T));
    }
    r.passed = bounded_on_grid(scaled);
    r.detail = "scaled residuals " + join(scaled) + " bounded on the grid";
    return r;
}

// 6. Laplace ratios at T_max = 40/eps, plus the synthetic calibration.
CriterionResult laplace_scan(const RunConfig& config, EvalCache* cache) {
    CriterionResult r;
    r.name = "laplace scan";
    bool ok = true;
    std::string detail;
    for (double sigma : {0.0, -1.0}) {
        const auto rows = laplace_ratio_scan(sigma, {0.05, 0.02, 0.01}, config, LaplaceTarget::Weighted, cache);
        std::vector<double> gaps;
        for (const auto& row : rows) {
            gaps.push_back(std::abs(row.ratio - 1.0));
        }
        ok = ok && all_finite(gaps) && non_increasing(gaps) && gaps.back() <= 0.15;
        detail += "sigma=" + fmt("%g", sigma) + " |ratio-1| " + join(gaps) + "; ";
    }
    // F(t) = t^{3/2} on a step-1/32 grid against eps * exp_poly_integral
    const double eps = 0.05;
    std::vector<double> t;
    std::vector<double> F;
    for (long k = 0; k <= 32L * 799; ++k) {
        const double x = 1.0 + static_cast<double>(k) / 32.0;
        t.push_back(x);
        F.push_back(std::pow(x, 1.5));
    }
    const double numeric = laplace_numeric(0.0, eps, t, F).numeric;
    const double exact = eps * exp_poly_integral(1.5, eps);
    const double rel = std::abs(numeric / exact - 1.0);
    ok = ok && rel <= 1e-6;
    r.passed = ok;
    r.detail = detail + "synthetic rel error " + fmt("%.2e", rel) + " (<= 1e-6); gaps non-increasing, last <= 0.15";
    return r;
}

// 7. Lemma suites.
CriterionResult lemma_suites(const RunConfig& config, EvalCache*) {
    CriterionResult r;
    r.name = "lemma suites";
    double worst_lemma1 = 0.0;
    for (const BoundCheck& c : lemma1_sweep(config.seed, 1000)) {
        worst_lemma1 = std::max(worst_lemma1, c.ratio);
    }
    bool ok = worst_lemma1 <= 1.0;
    std::string detail = "lemma1 max ratio " + fmt("%.4f", worst_lemma1) + "; ";
    std::string failed;
    for (double sigma : {-1.0, -0.5, 0.25, 0.5, 1.0, 2.0}) {
        std::vector<double> res;
        for (double x : {1e3, 1e4, 1e5, 1e6}) {
            res.push_back(euler_scaled_residual(x, sigma));
        }
        if (!bounded_on_grid(res)) {
            ok = false;
            failed += " euler sigma=" + fmt("%g", sigma) + join(res);
        }
    }
    const std::vector<double> xs = {250.0, 500.0, 1000.0, 2000.0};
    const auto growth = [&](DoubleSumVariant v, double sigma, const char* label) {
        std::vector<double> ratios;
        for (double x : xs) {
            ratios.push_back(double_sum_growth(x, sigma, v).ratio);
        }
        if (!bounded_on_grid(ratios)) {
            ok = false;
            failed += std::string(" ") + label + " sigma=" + fmt("%g", sigma) + join(ratios);
        }
    };
    growth(DoubleSumVariant::Lemma2, -1.0, "lemma2");
    growth(DoubleSumVariant::Lemma2, -0.5, "lemma2");
    for (double sigma : {0.5, 1.0, 2.0}) {
        growth(DoubleSumVariant::Lemma3, sigma, "lemma3");
    }
    r.passed = ok;
    r.detail = detail + "euler residuals and lemma2/3 ratios bounded" + (failed.empty() ? "" : "; unbounded:" + failed);
    return r;
}

// 8. Direct contour against the main sum, and 2|R(1/2+it)| >= |zeta(1/2+it)|.
CriterionResult evaluator_cross_validation(const RunConfig& config, EvalCache*) {
    CriterionResult r;
    r.name = "evaluator cross-validation";
    bool ok = true;
    double constant = 0.0;
    std::string detail;
    for (double sigma : {0.0, 0.5, 1.0}) {
        std::vector<double> scaled;
        for (double t : {50.0, 100.0, 200.0, 500.0}) {
            const AuxEval d = eval_aux_direct(cplx(sigma, t), default_contour(t), config.special_fn_abs);
            scaled.push_back(std::abs(d.value - main_sum(sigma, t)) * std::pow(t, 0.5 * sigma));
        }
        constant = std::max(constant, *std::max_element(scaled.begin(), scaled.end()));
        ok = ok && all_finite(scaled) && bounded_on_grid(scaled);
        detail += "sigma=" + fmt("%g", sigma) + " " + join(scaled) + "; ";
    }
    double worst_gap = INFINITY;
    for (int k = 0; k < 200; ++k) {
        const double t = 10.0 + 190.0 * k / 199.0;
        const AuxEval d = eval_aux_direct(cplx(0.5, t), default_contour(t), config.special_fn_abs);
        const double zeta = std::abs(complex_zeta(cplx(0.5, t)).value);
        worst_gap = std::min(worst_gap, 2.0 * std::abs(d.value) - zeta);
    }
    ok = ok && worst_gap >= -1e-8;
    r.passed = ok;
    r.detail = detail + "common constant " + fmt("%.4f", constant) + "; min 2|R| - |zeta| " + fmt("%.3e", worst_gap) +
               " (>= -1e-8)";
    return r;
}

// 9. cmd_meanvalue with 1 and 8 threads gives the same bytes.
CriterionResult determinism(const RunConfig& config, EvalCache*) {
    CriterionResult r;
    r.name = "determinism across thread counts";
    RunConfig c = config;
    c.sigma_list = {0.0, 0.5};
    c.T_grid = two_pi_times({10.0, 50.0, 200.0});
    c.t_switch = 200.0;
    c.weighted = true;
    c.thread_budget = 1;
    const std::string one = cmd_meanvalue(c).table.to_string();
    c.thread_budget = 8;
    const std::string eight = cmd_meanvalue(c).table.to_string();
    r.passed = one == eight;
    r.detail = std::to_string(one.size()) + " bytes; outputs " + (r.passed ? "identical" : "differ");
    return r;
}

}  // namespace

CriterionResult run_criterion(int id, const RunConfig& config, EvalCache* cache) {
    using Fn = CriterionResult (*)(const RunConfig&, EvalCache*);
    static const Fn table[] = {decomposition_exactness, weighted_sigma_zero, half_line_constant_fit,
                               unweighted_sigma_two,    unweighted_sigma_half, laplace_scan,
                               lemma_suites,            evaluator_cross_validation, determinism};
    if (id < 1 || id > 9) {
        throw DomainError("acceptance: criteria are numbered 1 to 9");
    }
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = table[id - 1](config, cache);
    } catch (const Error& e) {
        static const char* const names[] = {"decomposition exactness", "weighted mean sigma=0",
                                            "sigma=1/2 constant discrimination", "unweighted mean sigma=2",
                                            "unweighted mean sigma=1/2", "laplace scan", "lemma suites",
                                            "evaluator cross-validation", "determinism across thread counts"};
        r.name = names[id - 1];
        r.passed = false;
        r.detail = std::string("error: ") + e.what();
    }
    r.id = id;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> run_acceptance(const RunConfig& config, EvalCache* cache) {
    EvalCache local;
    EvalCache* shared = cache != nullptr ? cache : &local;
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 9; ++id) {
        out.push_back(run_criterion(id, config, shared));
    }
    return out;
}

}  // namespace auxmean
