#include "auxmean/lemma_oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "auxmean/csv.hpp"
#include "auxmean/errors.hpp"
#include "auxmean/quadrature.hpp"
#include "auxmean/special_functions.hpp"
#include "auxmean/summation.hpp"

#ifdef AUXMEAN_HAVE_QUADMATH
#include <quadmath.h>
#endif

namespace auxmean {
namespace {

#ifdef AUXMEAN_HAVE_QUADMATH
using wide = __float128;
wide wide_const(const char* digits) { return strtoflt128(digits, nullptr); }
wide wide_log(wide x) { return logq(x); }
wide wide_pow(wide x, wide y) { return powq(x, y); }
wide wide_sqrt(wide x) { return sqrtq(x); }
#else
using wide = long double;
wide wide_const(const char* digits) { return std::strtold(digits, nullptr); }
wide wide_log(wide x) { return std::log(x); }
wide wide_pow(wide x, wide y) { return std::pow(x, y); }
wide wide_sqrt(wide x) { return std::sqrt(x); }
#endif

const char* const kPiDigits = "3.14159265358979323846264338327950288419716939937510";
const char* const kGammaDigits = "0.57721566490153286060651209008240243104215933593992";

// x^e in extended precision; small integer and -1/2 exponents avoid powq.
wide wide_power(wide x, double e) {
    if (e == std::floor(e) && std::abs(e) <= 8.0) {
        wide p = 1;
        for (int i = 0; i < static_cast<int>(std::abs(e)); ++i) {
            p *= x;
        }
        return e >= 0.0 ? p : 1 / p;
    }
    if (e == -0.5) {
        return 1 / wide_sqrt(x);
    }
    return wide_pow(x, static_cast<wide>(e));
}

// zeta(2 sigma) in extended precision where a closed form exists.
wide wide_zeta_even(double sigma) {
    const wide pi = wide_const(kPiDigits);
    const double k = 2.0 * sigma;
    if (k == 2.0) {
        return pi * pi / 6;
    }
    if (k == 4.0) {
        return pi * pi * pi * pi / 90;
    }
    if (k == 6.0) {
        return pi * pi * pi * pi * pi * pi / 945;
    }
    if (k == 8.0) {
        const wide p4 = pi * pi * pi * pi;
        return p4 * p4 / 9450;
    }
    return static_cast<wide>(real_zeta(k).value);
}

std::string format_inputs(std::initializer_list<std::pair<const char*, double>> kv) {
    std::string out;
    for (const auto& [k, v] : kv) {
        if (!out.empty()) {
            out += ';';
        }
        out += k;
        out += '=';
        out += format_double(v);
    }
    return out;
}

}  // namespace

double osc_integral(double a, double b, double alpha, double beta) {
    if (beta == 0.0) {
        throw DomainError("osc_integral: beta must be nonzero");
    }
    if (!(a > 0.0) || !(a < b)) {
        throw DomainError("osc_integral: requires 0 < a < b");
    }
    const long pieces = std::max(1L, static_cast<long>(std::ceil(std::abs(beta) * (b - a) / kPi)));
    auto f = [alpha, beta](double t) { return std::pow(t, alpha) * std::cos(beta * t); };
    const QuadratureResult r = integrate_adaptive(f, a, b, 1e-11, 1e-12, pieces, 4000000);
    return r.value;
}

BoundCheck lemma1_check(double a, double b, double alpha, double beta) {
    BoundCheck c;
    c.lemma = "lemma1";
    c.inputs = format_inputs({{"a", a}, {"b", b}, {"alpha", alpha}, {"beta", beta}});
    c.lhs = std::abs(osc_integral(a, b, alpha, beta));
    c.rhs_bound = 3.0 / std::abs(beta) * std::max(std::pow(a, alpha), std::pow(b, alpha));
    c.ratio = c.lhs / c.rhs_bound;
    return c;
}

std::vector<BoundCheck> lemma1_sweep(std::uint64_t seed, long count) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> endpoint(0.1, 100.0);
    std::uniform_real_distribution<double> exponent(-3.0, 3.0);
    std::uniform_real_distribution<double> frequency(0.01, 50.0);
    std::bernoulli_distribution negative(0.5);
    std::vector<BoundCheck> out;
    out.reserve(static_cast<std::size_t>(std::max(0L, count)));
    for (long i = 0; i < count; ++i) {
        double a = endpoint(rng);
        double b = endpoint(rng);
        while (a == b) {
            b = endpoint(rng);
        }
        if (a > b) {
            std::swap(a, b);
        }
        const double alpha = exponent(rng);
        double beta = frequency(rng);
        if (negative(rng)) {
            beta = -beta;
        }
        out.push_back(lemma1_check(a, b, alpha, beta));
    }
    return out;
}

double power_sum_partial(double x, double sigma) {
    if (!(x >= 1.0)) {
        throw DomainError("power_sum_partial: requires x >= 1");
    }
    const long n_max = static_cast<long>(std::floor(x));
    CompensatedSum acc;
    for (long n = n_max; n >= 1; --n) {
        acc.add(std::exp(-2.0 * sigma * std::log(static_cast<double>(n))));
    }
    return acc.value();
}

double euler_asymptotic(double x, double sigma) {
    if (!(x >= 1.0)) {
        throw DomainError("euler_asymptotic: requires x >= 1");
    }
    if (sigma == 0.5) {
        return std::log(x) + euler_gamma();
    }
    const double power = std::pow(x, 1.0 - 2.0 * sigma) / (1.0 - 2.0 * sigma);
    if (sigma <= 0.0) {
        return power;
    }
    return real_zeta(2.0 * sigma).value + power;
}

double euler_scaled_residual(double x, double sigma) {
    if (!(x >= 1.0)) {
        throw DomainError("euler_scaled_residual: requires x >= 1");
    }
    const long n_max = static_cast<long>(std::floor(x));
    wide partial = 0;
    for (long n = n_max; n >= 1; --n) {
        partial += wide_power(static_cast<wide>(n), -2.0 * sigma);
    }
    const wide wx = static_cast<wide>(x);
    if (sigma == 0.5) {
        const wide r = partial - wide_log(wx) - wide_const(kGammaDigits);
        return static_cast<double>(r * wx);
    }
    const double e = 1.0 - 2.0 * sigma;
    wide asymptotic = wide_power(wx, e) / static_cast<wide>(e);
    if (sigma > 0.0) {
        asymptotic += wide_zeta_even(sigma);
    }
    return static_cast<double>((partial - asymptotic) * wide_power(wx, 2.0 * sigma));
}

BoundCheck euler_check(double x, double sigma) {
    BoundCheck c;
    c.lemma = "euler";
    c.inputs = format_inputs({{"x", x}, {"sigma", sigma}});
    c.lhs = power_sum_partial(x, sigma);
    c.rhs_bound = euler_asymptotic(x, sigma);
    c.ratio = euler_scaled_residual(x, sigma);
    return c;
}

BoundCheck double_sum_growth(double x, double sigma, DoubleSumVariant variant) {
    if (x > 3000.0) {
        throw BudgetError("double_sum_growth: x above the direct-summation budget 3000");
    }
    if (!(x >= 1.0)) {
        throw DomainError("double_sum_growth: requires x >= 1");
    }
    if (variant == DoubleSumVariant::Lemma2 && !(sigma < 0.0)) {
        throw DomainError("double_sum_growth: the Lemma2 variant requires sigma < 0");
    }
    const long n_max = static_cast<long>(std::floor(x));
    std::vector<double> logs(static_cast<std::size_t>(n_max) + 1, 0.0);
    for (long n = 1; n <= n_max; ++n) {
        logs[n] = std::log(static_cast<double>(n));
    }
    CompensatedSum acc;
    for (long n = 2; n <= n_max; ++n) {
        for (long m = 1; m < n; ++m) {
            const double log_ratio = std::log1p(static_cast<double>(n - m) / static_cast<double>(m));
            const double num = variant == DoubleSumVariant::Lemma2 ? std::exp(sigma * log_ratio)
                                                                   : std::exp(-sigma * (logs[n] + logs[m]));
            acc.add(num / log_ratio);
        }
    }
    BoundCheck c;
    c.lemma = variant == DoubleSumVariant::Lemma2 ? "lemma2" : "lemma3";
    c.inputs = format_inputs({{"x", x}, {"sigma", sigma}});
    c.lhs = acc.value();
    const double lx = std::log(x);
    if (variant == DoubleSumVariant::Lemma2) {
        c.rhs_bound = x * x * lx;
    } else if (sigma < 1.0) {
        c.rhs_bound = std::pow(x, 2.0 - 2.0 * sigma) * lx;
    } else if (sigma == 1.0) {
        c.rhs_bound = lx * lx;
    } else {
        c.rhs_bound = 1.0;
    }
    c.ratio = c.rhs_bound > 0.0 ? c.lhs / c.rhs_bound : (c.lhs == 0.0 ? 0.0 : INFINITY);
    return c;
}

bool bounded_on_grid(const std::vector<double>& values, double growth_factor) {
    if (values.empty()) {
        return true;
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            return false;
        }
    }
    const std::size_t n = values.size();
    const std::size_t half = (n + 1) / 2;
    double early = 0.0;
    double late = 0.0;
    for (std::size_t i = 0; i < half; ++i) {
        early = std::max(early, std::abs(values[i]));
    }
    for (std::size_t i = n - half; i < n; ++i) {
        late = std::max(late, std::abs(values[i]));
    }
    return late <= growth_factor * early;
}

}  // namespace auxmean
