#include "auxmean/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "auxmean/errors.hpp"
#include "auxmean/summation.hpp"

namespace auxmean {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_{2k} for k = 1..15.
constexpr std::array<double, 15> kBernoulli2k = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

// (2k)! for k = 1..15, exact in binary64 up to 22! and correctly rounded after.
constexpr std::array<double, 15> kFactorial2k = {
    2.0,
    24.0,
    720.0,
    40320.0,
    3628800.0,
    479001600.0,
    87178291200.0,
    20922789888000.0,
    6402373705728000.0,
    2432902008176640000.0,
    1.1240007277776077e21,
    6.204484017332394e23,
    4.0329146112660565e26,
    3.0488834461171387e29,
    2.6525285981219107e32,
};

constexpr int kEulerMaclaurinCorrections = 12;
constexpr long kMaxZetaTerms = 1L << 22;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Euler-Maclaurin for zeta(s) with N leading terms and kEulerMaclaurinCorrections
// Bernoulli corrections. Returns the value with truncation + rounding bound;
// the truncation part alone goes to *truncation_out.
EvalResult<cplx> zeta_euler_maclaurin(cplx s, long n_terms, double* truncation_out) {
    CompensatedComplexSum head;
    double magnitude = 0.0;
    for (long n = n_terms - 1; n >= 1; --n) {
        const cplx term = std::exp(-s * std::log(static_cast<double>(n)));
        head.add(term);
        magnitude += std::abs(term);
    }

    const double big_n = static_cast<double>(n_terms);
    const double log_n = std::log(big_n);
    const cplx n_pow = std::exp(-s * log_n);  // N^{-s}
    cplx tail = n_pow * big_n / (s - 1.0) + 0.5 * n_pow;

    cplx rising = s;  // s (s+1) ... (s + 2k - 2)
    double inv_n_power = 1.0 / big_n;
    for (int k = 1; k <= kEulerMaclaurinCorrections; ++k) {
        tail += kBernoulli2k[k - 1] / kFactorial2k[k - 1] * rising * n_pow * inv_n_power;
        rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        inv_n_power /= big_n * big_n;
    }
    const int m = kEulerMaclaurinCorrections;
    const double next = std::abs(kBernoulli2k[m] / kFactorial2k[m] * rising * n_pow * inv_n_power);
    const double sigma = s.real();
    const double truncation = next * std::abs(s + static_cast<double>(2 * m + 1)) / (sigma + 2 * m + 1);

    magnitude += std::abs(tail);
    const double rounding = kEps * magnitude * (4.0 + std::abs(s) * log_n);

    *truncation_out = truncation;
    EvalResult<cplx> out;
    out.value = head.value() + tail;
    out.abs_error_bound = truncation + rounding;
    out.terms_used = n_terms + kEulerMaclaurinCorrections;
    return out;
}

long initial_zeta_terms(cplx s) {
    return std::max(20L, static_cast<long>(std::ceil(2.0 * std::abs(s.imag()))));
}

// Doubles N while the truncation part is above target; rounding is not
// improved by more terms so it does not drive the loop.
EvalResult<cplx> zeta_em_adaptive(cplx s) {
    long n = initial_zeta_terms(s);
    double truncation = 0.0;
    EvalResult<cplx> r = zeta_euler_maclaurin(s, n, &truncation);
    while (truncation > 1e-15 * std::max(1.0, std::abs(r.value)) && n < kMaxZetaTerms / 2) {
        const EvalResult<cplx> finer = zeta_euler_maclaurin(s, 2 * n, &truncation);
        const double moved = std::abs(finer.value - r.value);
        n *= 2;
        r = finer;
        if (moved <= r.abs_error_bound) {
            break;
        }
    }
    return r;
}

// log sin(z) without overflow for large |Im z|; branch is irrelevant because
// callers exponentiate.
cplx log_sin(cplx z) {
    const cplx i(0.0, 1.0);
    if (z.imag() > 0.0) {
        return -i * z + std::log(1.0 - std::exp(2.0 * i * z)) - std::log(cplx(0.0, -2.0));
    }
    if (z.imag() < 0.0) {
        return i * z + std::log(1.0 - std::exp(-2.0 * i * z)) - std::log(cplx(0.0, 2.0));
    }
    return std::log(cplx(std::sin(z.real()), 0.0));
}

// Godfrey's Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_gamma(double x) {
    // x >= 0.5
    const double xm = x - 1.0;
    double a = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        a += kLanczos[i] / (xm + static_cast<double>(i));
    }
    const double t = xm + kLanczosG + 0.5;
    return std::sqrt(kTwoPi) * std::exp((xm + 0.5) * std::log(t) - t) * a;
}

}  // namespace

EvalResult<double> real_zeta(double s) {
    if (std::abs(s - 1.0) < 1e-6) {
        throw PoleError("real_zeta: argument within 1e-6 of the pole at s = 1");
    }
    if (!std::isfinite(s)) {
        throw DomainError("real_zeta: non-finite argument");
    }
    if (s >= 0.0) {
        const EvalResult<cplx> r = zeta_em_adaptive(cplx(s, 0.0));
        return {r.value.real(), r.abs_error_bound, r.terms_used};
    }
    if (s == std::floor(s) && std::fmod(s, 2.0) == 0.0) {
        return {0.0, 0.0, 0};  // trivial zeros
    }
    if (s < -160.0) {
        throw DomainError("real_zeta: reflection overflows below s = -160");
    }
    // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
    const EvalResult<double> g = gamma_real(1.0 - s);
    const EvalResult<double> z = real_zeta(1.0 - s);
    const double factor = std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(0.5 * kPi * s);
    EvalResult<double> out;
    out.value = factor * g.value * z.value;
    const double rel = g.abs_error_bound / std::abs(g.value) + z.abs_error_bound / std::abs(z.value) +
                       kEps * (8.0 + 2.0 * std::abs(s));
    out.abs_error_bound = std::abs(out.value) * rel;
    out.terms_used = z.terms_used;
    return out;
}

EvalResult<cplx> complex_zeta(cplx s) {
    if (std::abs(s - 1.0) < 1e-6) {
        throw PoleError("complex_zeta: argument within 1e-6 of the pole at s = 1");
    }
    if (std::abs(s.imag()) > 1e5) {
        throw DomainError("complex_zeta: |Im s| exceeds the supported range 1e5");
    }
    if (s.real() >= 0.0) {
        return zeta_em_adaptive(s);
    }
    if (s.imag() == 0.0 && s.real() == std::floor(s.real()) && std::fmod(s.real(), 2.0) == 0.0) {
        return {cplx(0.0, 0.0), 0.0, 0};
    }
    const EvalResult<cplx> reflected = zeta_em_adaptive(1.0 - s);
    const cplx chi = zeta_chi(s);
    EvalResult<cplx> out;
    out.value = chi * reflected.value;
    out.abs_error_bound = std::abs(chi) * reflected.abs_error_bound +
                          std::abs(out.value) * kEps * (16.0 + 4.0 * std::abs(s));
    out.terms_used = reflected.terms_used;
    return out;
}

cplx zeta_chi(cplx s) {
    // chi(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s); Gamma(1-s) through log_gamma
    // when Re(1-s) > 0, otherwise via the reflection chi(s) chi(1-s) = 1.
    if (s.real() >= 1.0) {
        return 1.0 / zeta_chi(1.0 - s);
    }
    const cplx log_chi = s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_sin(0.5 * kPi * s) +
                         log_gamma(1.0 - s).value;
    return std::exp(log_chi);
}

EvalResult<cplx> log_gamma(cplx z) {
    if (!(z.real() > 0.0)) {
        throw DomainError("log_gamma: requires Re z > 0");
    }
    constexpr double kShiftTo = 15.0;
    constexpr int kStirlingTerms = 10;

    cplx w = z;
    cplx shift_sum(0.0, 0.0);
    double shift_mag = 0.0;
    if (std::abs(z) < kShiftTo) {
        const int n = static_cast<int>(std::ceil(kShiftTo - z.real()));
        for (int k = 0; k < n; ++k) {
            const cplx l = std::log(z + static_cast<double>(k));
            shift_sum += l;
            shift_mag += std::abs(l);
        }
        w = z + static_cast<double>(n);
    }

    const cplx log_w = std::log(w);
    cplx series(0.0, 0.0);
    const cplx inv_w = 1.0 / w;
    const cplx inv_w2 = inv_w * inv_w;
    cplx power = inv_w;
    for (int k = 1; k <= kStirlingTerms; ++k) {
        series += kBernoulli2k[k - 1] / static_cast<double>(2 * k * (2 * k - 1)) * power;
        power *= inv_w2;
    }
    const int m = kStirlingTerms + 1;
    const double next = std::abs(kBernoulli2k[m - 1] / static_cast<double>(2 * m * (2 * m - 1)) * power);

    const cplx main = (w - 0.5) * log_w - w + 0.5 * std::log(kTwoPi);
    EvalResult<cplx> out;
    out.value = main + series - shift_sum;
    out.abs_error_bound = 2.0 * next + kEps * (4.0 * (std::abs(w) * (std::abs(log_w) + 1.0)) + 2.0 * shift_mag);
    out.terms_used = kStirlingTerms;
    return out;
}

EvalResult<double> gamma_real(double x) {
    if (is_nonpositive_integer(x)) {
        throw PoleError("gamma_real: pole at non-positive integer " + std::to_string(x));
    }
    if (x > 171.6) {
        throw DomainError("gamma_real: overflow for x > 171.6");
    }
    EvalResult<double> out;
    out.terms_used = static_cast<long>(kLanczos.size());
    if (x < 0.5) {
        const double s = std::sin(kPi * x);
        out.value = kPi / (s * lanczos_gamma(1.0 - x));
        // sin(pi x) is evaluated on the rounded product pi*x.
        const double cot = std::abs(std::cos(kPi * x) / s);
        out.abs_error_bound = std::abs(out.value) * kEps * (32.0 + 4.0 * std::abs(x) * kPi * cot);
        return out;
    }
    out.value = lanczos_gamma(x);
    out.abs_error_bound = std::abs(out.value) * kEps * (32.0 + 2.0 * x * std::abs(std::log(x + kLanczosG)));
    return out;
}

EvalResult<double> riemann_siegel_theta(double t) {
    const double at = std::abs(t);
    const double sign = t < 0.0 ? -1.0 : 1.0;
    EvalResult<double> out;
    if (at >= 40.0) {
        const double inv = 1.0 / at;
        const double inv2 = inv * inv;
        const double lead = 0.5 * at * (std::log(at / kTwoPi) - 1.0) - kPi / 8.0;
        const double series =
            inv * (1.0 / 48.0 +
                   inv2 * (7.0 / 5760.0 + inv2 * (31.0 / 80640.0 + inv2 * (127.0 / 430080.0 +
                                                                          inv2 * (511.0 / 1216512.0)))));
        out.value = sign * (lead + series);
        const double next = 1414477.0 / 2677114880.0 * std::pow(inv, 11);
        out.abs_error_bound = next + 4.0 * kEps * std::abs(lead);
        out.terms_used = 5;
        return out;
    }
    const EvalResult<cplx> lg = log_gamma(cplx(0.25, 0.5 * at));
    out.value = sign * (lg.value.imag() - 0.5 * at * std::log(kPi));
    out.abs_error_bound = lg.abs_error_bound + 2.0 * kEps * at;
    out.terms_used = lg.terms_used;
    return out;
}

}  // namespace auxmean
