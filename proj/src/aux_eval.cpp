#include "auxmean/aux_eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "auxmean/cache.hpp"
#include "auxmean/errors.hpp"
#include "auxmean/quadrature.hpp"
#include "auxmean/summation.hpp"

namespace auxmean {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kPanelOrder = 16;
constexpr int kMaxNodesPerUnit = 4096;
constexpr double kMaxDirectOrdinate = 2000.0;
constexpr double kMinPoleDistance = 0.2;
// Panels whose integrand magnitude stays below e^{-46} (about 1e-20) of the
// peak along the line are not evaluated.
constexpr double kNegligibleLogMagnitude = 46.0;

cplx log_denominator(cplx x) {
    // log(e^{pi i x} - e^{-pi i x}) with the dominant exponential factored out
    const cplx i(0.0, 1.0);
    if (x.imag() >= 0.0) {
        return -kPi * i * x + std::log(std::exp(2.0 * kPi * i * x) - 1.0);
    }
    return kPi * i * x + std::log(1.0 - std::exp(-2.0 * kPi * i * x));
}

// log of x^{-s} e^{pi i x^2} / (e^{pi i x} - e^{-pi i x})
cplx log_integrand(cplx s, cplx x) {
    const cplx i(0.0, 1.0);
    return -s * std::log(x) + kPi * i * x * x - log_denominator(x);
}

// Real part of log_integrand only; smooth along the line, used for the
// magnitude scan that trims negligible panels.
double log_magnitude(cplx s, cplx x) {
    const double log_abs_x = std::log(std::abs(x));
    const double arg_x = std::arg(x);
    const double re_pi_i_x2 = -kPi * 2.0 * x.real() * x.imag();
    const double im = x.imag();
    const double log_denom_abs = kPi * std::abs(im) + std::log(std::abs(1.0 - std::exp(-2.0 * kPi * std::abs(im)) *
                                                                              std::polar(1.0, 2.0 * kPi * x.real())));
    return -s.real() * log_abs_x + s.imag() * arg_x + re_pi_i_x2 - log_denom_abs;
}

struct LineQuadrature {
    cplx integral;       // integral over u in [-U, U] of g(x(u)) du
    double magnitude;    // sum of |w g| (rounding scale)
    double max_abs_log;  // largest |log g| met (phase rounding scale)
    long evaluations;
};

LineQuadrature integrate_line(cplx s, const ContourSpec& c, int nodes_per_unit, const std::vector<bool>& active,
                              int scan_per_unit) {
    const GaussLegendreRule& rule = gauss_legendre(kPanelOrder);
    const double U = c.half_length;
    const double width = static_cast<double>(kPanelOrder) / nodes_per_unit;
    const long n_panels = static_cast<long>(std::ceil(2.0 * U / width));
    const double h = 2.0 * U / static_cast<double>(n_panels);
    const cplx dir = std::polar(1.0, c.direction_angle);

    CompensatedComplexSum acc;
    LineQuadrature out{};
    for (long p = 0; p < n_panels; ++p) {
        const double a = -U + h * static_cast<double>(p);
        const double b = a + h;
        // skip when every scan cell touching [a, b] is negligible
        const long lo = std::max(0L, static_cast<long>(std::floor((a + U) * scan_per_unit)) - 1);
        const long hi = std::min(static_cast<long>(active.size()) - 1,
                                 static_cast<long>(std::ceil((b + U) * scan_per_unit)) + 1);
        bool needed = false;
        for (long k = lo; k <= hi; ++k) {
            if (active[k]) {
                needed = true;
                break;
            }
        }
        if (!needed) {
            continue;
        }
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * h;
        cplx panel(0.0, 0.0);
        for (int j = 0; j < rule.order(); ++j) {
            const double u = mid + half * rule.nodes[j];
            const cplx x = c.crossing + u * dir;
            const cplx e = log_integrand(s, x);
            const cplx g = std::exp(e);
            panel += rule.weights[j] * g;
            out.magnitude += rule.weights[j] * half * std::abs(g);
            out.max_abs_log = std::max(out.max_abs_log, std::abs(e));
            ++out.evaluations;
        }
        acc.add(panel * half);
    }
    out.integral = acc.value();
    return out;
}

cplx residue_sum(cplx s, double crossing) {
    CompensatedComplexSum acc;
    for (long n = 1; static_cast<double>(n) < crossing; ++n) {
        acc.add(std::exp(-s * std::log(static_cast<double>(n))));
    }
    return acc.value();
}

}  // namespace

std::string_view method_name(AuxMethod m) noexcept {
    return m == AuxMethod::MainSum ? "MainSum" : "DirectContour";
}

AuxMethod parse_method(std::string_view name) {
    if (name == "MainSum") {
        return AuxMethod::MainSum;
    }
    if (name == "DirectContour") {
        return AuxMethod::DirectContour;
    }
    throw DomainError("unknown evaluation method '" + std::string(name) + "'");
}

long main_sum_terms(double t) noexcept {
    if (!(t >= kTwoPi)) {
        return 0;
    }
    long n = static_cast<long>(std::floor(std::sqrt(t / kTwoPi)));
    while (kTwoPi * static_cast<double>(n + 1) * static_cast<double>(n + 1) <= t) {
        ++n;
    }
    while (n > 0 && kTwoPi * static_cast<double>(n) * static_cast<double>(n) > t) {
        --n;
    }
    return n;
}

cplx main_sum(double sigma, double t) {
    const long n_terms = main_sum_terms(t);
    CompensatedComplexSum acc;
    for (long n = 1; n <= n_terms; ++n) {
        const double log_n = std::log(static_cast<double>(n));
        acc.add(std::exp(-sigma * log_n) * std::polar(1.0, -t * log_n));
    }
    return acc.value();
}

ContourSpec default_contour(double t) {
    ContourSpec c;
    c.crossing = static_cast<double>(main_sum_terms(std::abs(t))) + 0.5;
    c.direction_angle = kPi / 4.0;
    c.half_length = std::max(4.0, std::sqrt(std::abs(t) / kPi) + 4.0);
    c.nodes_per_unit = 32;
    return c;
}

void validate_contour(const ContourSpec& c) {
    if (!(c.crossing > 0.0) || !std::isfinite(c.crossing)) {
        throw DomainError("contour: crossing must be a positive real");
    }
    if (!(c.half_length > 0.0) || c.nodes_per_unit < 1) {
        throw DomainError("contour: half_length and nodes_per_unit must be positive");
    }
    // e^{pi i x^2} decays along the line only for slope +1
    const double reduced = std::remainder(c.direction_angle - kPi / 4.0, kPi);
    if (std::abs(reduced) > 1e-12) {
        throw DomainError("contour: direction_angle must be pi/4 mod pi for e^{pi i x^2} to decay");
    }
    const double sin_dir = std::abs(std::sin(c.direction_angle));
    const long first = static_cast<long>(std::floor(c.crossing)) - 1;
    for (long k = std::max(0L, first); k <= first + 3; ++k) {
        if (std::abs(static_cast<double>(k) - c.crossing) * sin_dir < kMinPoleDistance) {
            throw DomainError("contour: line passes within 0.2 of the pole at x = " + std::to_string(k));
        }
    }
}

AuxEval eval_aux_direct(cplx s, const ContourSpec& contour, double abs_tol) {
    validate_contour(contour);
    if (std::abs(s.imag()) > kMaxDirectOrdinate) {
        throw DomainError("eval_aux_direct: |Im s| above 2000 is outside the direct-quadrature range");
    }

    // magnitude scan on a fine grid; log|g| is smooth so 16 cells per unit suffice
    constexpr int kScanPerUnit = 16;
    const double U = contour.half_length;
    const long n_scan = static_cast<long>(std::ceil(2.0 * U * kScanPerUnit)) + 1;
    const cplx dir = std::polar(1.0, contour.direction_angle);
    std::vector<double> scan(n_scan);
    double peak = -std::numeric_limits<double>::infinity();
    for (long k = 0; k < n_scan; ++k) {
        const double u = std::min(U, -U + static_cast<double>(k) / kScanPerUnit);
        scan[k] = log_magnitude(s, contour.crossing + u * dir);
        peak = std::max(peak, scan[k]);
    }
    std::vector<bool> active(n_scan);
    for (long k = 0; k < n_scan; ++k) {
        active[k] = scan[k] > peak - kNegligibleLogMagnitude;
    }

    const cplx residues = residue_sum(s, contour.crossing);
    const cplx factor = -dir;  // traversal from +U to -U

    int npu = contour.nodes_per_unit;
    LineQuadrature coarse = integrate_line(s, contour, npu, active, kScanPerUnit);
    long evaluations = coarse.evaluations;
    while (true) {
        if (2 * npu > kMaxNodesPerUnit) {
            throw ConvergenceError("eval_aux_direct: step halving did not converge at s = (" +
                                   std::to_string(s.real()) + ", " + std::to_string(s.imag()) + ")");
        }
        const LineQuadrature fine = integrate_line(s, contour, 2 * npu, active, kScanPerUnit);
        evaluations += fine.evaluations;
        const cplx value = residues + factor * fine.integral;
        const double diff = std::abs(fine.integral - coarse.integral);
        const double rounding = 8.0 * kEps * fine.magnitude * (4.0 + fine.max_abs_log) +
                                4.0 * kEps * std::abs(residues) * (1.0 + std::abs(s) * std::log(contour.crossing + 1.0));
        if (diff <= abs_tol * std::max(1.0, std::abs(value))) {
            AuxEval out;
            out.s = s;
            out.value = value;
            out.method = AuxMethod::DirectContour;
            out.error_bound = std::max(diff, rounding);
            out.evaluations = evaluations;
            return out;
        }
        coarse = fine;
        npu *= 2;
    }
}

double main_sum_error_constant(double sigma) {
    static std::mutex mutex;
    static std::map<double, double> memo;
    {
        std::lock_guard<std::mutex> lock(mutex);
        const auto it = memo.find(sigma);
        if (it != memo.end()) {
            return it->second;
        }
    }
    double worst = 0.0;
    constexpr int kPoints = 24;
    for (int k = 0; k < kPoints; ++k) {
        const double t = 100.0 + 400.0 * k / (kPoints - 1);
        const AuxEval direct = eval_aux_direct(cplx(sigma, t), default_contour(t));
        const double scaled = std::abs(direct.value - main_sum(sigma, t)) * std::pow(t, 0.5 * sigma);
        worst = std::max(worst, scaled);
    }
    const double c = 2.0 * worst;
    std::lock_guard<std::mutex> lock(mutex);
    memo.emplace(sigma, c);
    return c;
}

AuxEval eval_aux(cplx s, const RunConfig& config, EvalCache* cache) {
    const double sigma = s.real();
    const double t = s.imag();
    if (!(t > 0.0)) {
        throw DomainError("eval_aux: requires Im s > 0");
    }
    if (t <= config.t_switch) {
        const double tol = config.special_fn_abs;
        if (cache != nullptr) {
            if (const auto hit = cache->lookup(sigma, t, AuxMethod::DirectContour, tol)) {
                AuxEval out;
                out.s = s;
                out.value = cplx(hit->value_re, hit->value_im);
                out.method = AuxMethod::DirectContour;
                out.error_bound = hit->error_bound;
                out.evaluations = 0;
                return out;
            }
        }
        AuxEval out = eval_aux_direct(s, default_contour(t), tol);
        if (cache != nullptr) {
            cache->insert({sigma, t, AuxMethod::DirectContour, tol, out.value.real(), out.value.imag(),
                           out.error_bound});
        }
        return out;
    }
    AuxEval out;
    out.s = s;
    out.value = main_sum(sigma, t);
    out.method = AuxMethod::MainSum;
    out.c_model = main_sum_error_constant(sigma);
    out.error_bound = out.c_model * std::pow(t, -0.5 * sigma);
    out.evaluations = 1;
    return out;
}

CriticalLineParts critical_line_decomposition(double t, const RunConfig& config) {
    if (!(t >= 1.0)) {
        throw DomainError("critical_line_decomposition: requires t >= 1");
    }
    const AuxEval r = eval_aux(cplx(0.5, t), config);
    const EvalResult<double> theta = riemann_siegel_theta(t);
    const cplx rotated = 2.0 * std::polar(1.0, theta.value) * r.value;
    return {rotated.real(), rotated.imag(), 2.0 * r.error_bound + 2.0 * std::abs(r.value) * theta.abs_error_bound};
}

}  // namespace auxmean
