#pragma once

#include <complex>

namespace auxmean {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;

// A computed value together with an absolute error estimate and the number of
// series terms (or nodes) that went into it.
template <class T>
struct EvalResult {
    T value{};
    double abs_error_bound = 0.0;
    long terms_used = 0;
};

/// Euler's constant to full binary64 precision.
constexpr double euler_gamma() noexcept { return 0.57721566490153286060651209008240243; }

/// Riemann zeta at a real argument. Euler-Maclaurin for s >= 0, reflection
/// through gamma_real for s < 0. Throws PoleError when |s - 1| < 1e-6.
EvalResult<double> real_zeta(double s);

/// Riemann zeta at a complex argument by Euler-Maclaurin summation
/// (reflection for Re s < 0). Valid for |Im s| <= 1e5.
EvalResult<cplx> complex_zeta(cplx s);

/// Principal branch of log Gamma (continuous in the right half plane).
/// Requires Re z > 0.
EvalResult<cplx> log_gamma(cplx z);

/// Gamma at a real argument (Lanczos, reflection below 1/2).
EvalResult<double> gamma_real(double x);

/// Riemann-Siegel theta: Im log Gamma(1/4 + it/2) - (t/2) log pi.
EvalResult<double> riemann_siegel_theta(double t);

/// chi(s) with zeta(s) = chi(s) zeta(1 - s). Used by the critical-line checks.
cplx zeta_chi(cplx s);

}  // namespace auxmean
