#pragma once

#include <complex>
#include <string_view>

#include "auxmean/config.hpp"
#include "auxmean/special_functions.hpp"

namespace auxmean {

class EvalCache;

enum class AuxMethod { MainSum, DirectContour };

std::string_view method_name(AuxMethod m) noexcept;
AuxMethod parse_method(std::string_view name);

// Straight line x(u) = crossing + u e^{i direction_angle}, u in [-U, U],
// traversed from u = +U to u = -U. When crossing > 1 the poles 1..floor(crossing)
// lie between this line and the defining one and their residues n^{-s} are
// added back, so the value is still R(s).
struct ContourSpec {
    double crossing = 0.5;
    double direction_angle = kPi / 4.0;
    double half_length = 4.0;
    int nodes_per_unit = 32;
};

/// Line through floor(sqrt(t/2pi)) + 1/2 (near the saddle point of
/// x^{-s} e^{pi i x^2}) with slope 1 and U = max(4, sqrt(t/pi) + 4).
ContourSpec default_contour(double t);

/// Throws DomainError when the line passes within 0.2 of an integer, does not
/// cross the positive real axis, or e^{pi i x^2} fails to decay along it.
void validate_contour(const ContourSpec& contour);

struct AuxEval {
    cplx s;
    cplx value;
    AuxMethod method = AuxMethod::MainSum;
    double error_bound = 0.0;
    double c_model = 0.0;  // MainSum only: error_bound = c_model * t^{-sigma/2}
    long evaluations = 0;  // integrand evaluations spent (0 for cache hits)
};

/// Number of terms in the main sum: largest n with 2 pi n^2 <= t (boundary
/// included).
long main_sum_terms(double t) noexcept;

/// sum_{n <= sqrt(t/2pi)} n^{-sigma - it}; empty sum is 0.
cplx main_sum(double sigma, double t);

/// Composite Gauss-Legendre along the contour, nodes_per_unit doubled until
/// two successive values agree to abs_tol * max(1, |value|) (max 4096 per
/// unit). error_bound is the last step-halving difference, floored by the
/// rounding estimate.
AuxEval eval_aux_direct(cplx s, const ContourSpec& contour, double abs_tol = 1e-11);

/// Empirical constant C with |R(s) - main_sum| <= C t^{-sigma/2}: twice the
/// largest scaled difference over 24 ordinates in [100, 500]. Memoized per
/// sigma; thread-safe.
double main_sum_error_constant(double sigma);

/// Method dispatch: DirectContour for t <= config.t_switch, MainSum above.
/// `cache`, when given, serves and records DirectContour values.
AuxEval eval_aux(cplx s, const RunConfig& config, EvalCache* cache = nullptr);

struct CriticalLineParts {
    double z_aux;  // Re 2 e^{i theta(t)} R(1/2 + it), approximates Hardy's Z(t)
    double y_aux;  // Im of the same
    double error_bound;
};

CriticalLineParts critical_line_decomposition(double t, const RunConfig& config = {});

}  // namespace auxmean
