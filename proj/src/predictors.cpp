#include "auxmean/predictors.hpp"

#include <algorithm>
#include <cmath>

#include "auxmean/errors.hpp"
#include "auxmean/special_functions.hpp"

namespace auxmean {
namespace {

double zeta2s(double sigma) { return real_zeta(2.0 * sigma).value; }

void require_below_half(double sigma, const char* what) {
    if (!(sigma < 0.5)) {
        throw DomainError(std::string(what) + ": requires sigma < 1/2");
    }
}

}  // namespace

std::string regime_label(Regime r) {
    switch (r) {
        case Regime::WeightedNegative: return "weighted:sigma<0";
        case Regime::WeightedLow: return "weighted:0<=sigma<=1/4";
        case Regime::WeightedQuarterHalf: return "weighted:1/4<sigma<1/2";
        case Regime::WeightedHalf: return "weighted:sigma=1/2";
        case Regime::WeightedHalfOne: return "weighted:1/2<sigma<1";
        case Regime::WeightedOneTwo: return "weighted:1<=sigma<=2";
        case Regime::WeightedAboveTwo: return "weighted:sigma>2";
        case Regime::UnweightedLow: return "unweighted:sigma<=1/4";
        case Regime::UnweightedQuarterHalf: return "unweighted:1/4<sigma<1/2";
        case Regime::UnweightedHalf: return "unweighted:sigma=1/2";
        case Regime::UnweightedHalfOne: return "unweighted:1/2<sigma<1";
        case Regime::UnweightedOne: return "unweighted:sigma=1";
        case Regime::UnweightedOneTwo: return "unweighted:1<sigma<2";
        case Regime::UnweightedTwoAndAbove: return "unweighted:sigma>=2";
    }
    return "unknown";
}

Regime regime_of(double sigma, MeanTheorem theorem) {
    if (std::isnan(sigma)) {
        throw DomainError("regime_of: sigma is NaN");
    }
    if (theorem == MeanTheorem::WeightedMean) {
        if (sigma < 0.0) return Regime::WeightedNegative;
        if (sigma <= 0.25) return Regime::WeightedLow;
        if (sigma < 0.5) return Regime::WeightedQuarterHalf;
        if (sigma == 0.5) return Regime::WeightedHalf;
        if (sigma < 1.0) return Regime::WeightedHalfOne;
        if (sigma <= 2.0) return Regime::WeightedOneTwo;
        return Regime::WeightedAboveTwo;
    }
    if (sigma <= 0.25) return Regime::UnweightedLow;
    if (sigma < 0.5) return Regime::UnweightedQuarterHalf;
    if (sigma == 0.5) return Regime::UnweightedHalf;
    if (sigma < 1.0) return Regime::UnweightedHalfOne;
    if (sigma == 1.0) return Regime::UnweightedOne;
    if (sigma < 2.0) return Regime::UnweightedOneTwo;
    return Regime::UnweightedTwoAndAbove;
}

double Prediction::evaluate(double T) const {
    const double u = T / kTwoPi;
    const double log_u = std::log(u);
    double total = 0.0;
    for (const MainTerm& m : main_terms) {
        total += m.coefficient * std::pow(u, m.power) * std::pow(log_u, m.log_power);
    }
    return total;
}

double Prediction::error_scale(double T) const {
    const double base = std::pow(T, error_exponent);
    return log_factor_in_error ? base * std::sqrt(std::log(T)) : base;
}

double half_line_constant(HalfLineConstant which) {
    const double g = euler_gamma();
    return which == HalfLineConstant::Derived ? 2.0 * (3.0 * g - 1.0) / 9.0 : 2.0 * (3.0 * g - 4.0) / 9.0;
}

Prediction predict_weighted(double sigma, HalfLineConstant constant) {
    Prediction p;
    p.regime = regime_of(sigma, MeanTheorem::WeightedMean);
    const auto sqrt_term = [sigma] { return MainTerm{2.0 / (3.0 * (1.0 - 2.0 * sigma)), 0.5, 0}; };
    const auto zeta_term = [sigma] { return MainTerm{zeta2s(sigma) / (sigma + 1.0), sigma, 0}; };
    switch (p.regime) {
        case Regime::WeightedNegative:
        case Regime::WeightedLow:
            p.main_terms = {sqrt_term()};
            p.error_exponent = 0.25;
            break;
        case Regime::WeightedQuarterHalf:
            p.main_terms = {sqrt_term(), zeta_term()};
            p.error_exponent = 0.25;
            break;
        case Regime::WeightedHalf:
            p.main_terms = {{1.0 / 3.0, 0.5, 1}, {half_line_constant(constant), 0.5, 0}};
            p.error_exponent = 0.25;
            p.log_factor_in_error = true;
            break;
        case Regime::WeightedHalfOne:
            p.main_terms = {zeta_term(), sqrt_term()};
            p.error_exponent = 0.5 * sigma;
            break;
        case Regime::WeightedOneTwo:
            p.main_terms = {zeta_term()};
            p.error_exponent = 0.5 * sigma;
            break;
        default:
            p.main_terms = {zeta_term()};
            p.error_exponent = sigma - 1.0;
            break;
    }
    return p;
}

Prediction predict_unweighted(double sigma) {
    Prediction p;
    p.regime = regime_of(sigma, MeanTheorem::UnweightedMean);
    const auto power_term = [sigma] {
        return MainTerm{2.0 / ((1.0 - 2.0 * sigma) * (3.0 - 2.0 * sigma)), 0.5 - sigma, 0};
    };
    const auto zeta_term = [sigma] { return MainTerm{zeta2s(sigma), 0.0, 0}; };
    switch (p.regime) {
        case Regime::UnweightedLow:
            p.main_terms = {power_term()};
            p.error_exponent = 0.25 - sigma;
            break;
        case Regime::UnweightedQuarterHalf:
            p.main_terms = {power_term(), zeta_term()};
            p.error_exponent = 0.25 - sigma;
            break;
        case Regime::UnweightedHalf:
            p.main_terms = {{0.5, 0.0, 1}, {euler_gamma() - 0.5, 0.0, 0}};
            p.error_exponent = -0.25;
            p.log_factor_in_error = true;
            break;
        case Regime::UnweightedHalfOne:
            p.main_terms = {zeta_term(), power_term()};
            p.error_exponent = -0.5 * sigma;
            break;
        case Regime::UnweightedOne:
            p.main_terms = {zeta_term()};
            p.error_exponent = -0.5;
            p.log_factor_in_error = true;
            break;
        case Regime::UnweightedOneTwo:
            p.main_terms = {zeta_term()};
            p.error_exponent = -0.5 * sigma;
            break;
        default:
            p.main_terms = {zeta_term()};
            p.error_exponent = -1.0;
            break;
    }
    return p;
}

Prediction predict(double sigma, bool weighted, HalfLineConstant constant) {
    return weighted ? predict_weighted(sigma, constant) : predict_unweighted(sigma);
}

double predict_laplace_weighted(double sigma, double epsilon) {
    require_below_half(sigma, "predict_laplace_weighted");
    if (!(epsilon > 0.0)) {
        throw DomainError("predict_laplace_weighted: requires epsilon > 0");
    }
    return std::pow(2.0 * epsilon, -1.5) / (1.0 - 2.0 * sigma);
}

double predict_laplace_unweighted(double sigma, double epsilon) {
    require_below_half(sigma, "predict_laplace_unweighted");
    if (!(epsilon > 0.0)) {
        throw DomainError("predict_laplace_unweighted: requires epsilon > 0");
    }
    return std::pow(kTwoPi * epsilon, sigma - 0.5) * gamma_real(0.5 - sigma).value / (2.0 * epsilon);
}

double exp_poly_integral(double a, double epsilon) {
    if (!(a > 0.0)) {
        throw DomainError("exp_poly_integral: requires a > 0");
    }
    if (!(epsilon > 0.0 && epsilon <= 1.0)) {
        throw DomainError("exp_poly_integral: requires 0 < epsilon <= 1");
    }
    const double head = std::exp(log_gamma(cplx(1.0 + a, 0.0)).value.real() - (1.0 + a) * std::log(epsilon));
    // sum_{n>=1} (-1)^n eps^{n-1}/((n-1)! (a+n)); ratio of successive eps^{n-1}/(n-1)! is eps/n
    double power = 1.0;  // eps^{n-1}/(n-1)!
    double series = 0.0;
    for (int n = 1; n < 200; ++n) {
        const double term = (n % 2 == 0 ? 1.0 : -1.0) * power / (a + n);
        series += term;
        if (std::abs(term) < 1e-16 * std::max(1.0, std::abs(series))) {
            break;
        }
        power *= epsilon / n;
    }
    return head + series;
}

std::vector<ContinuityRow> continuity_audit(HalfLineConstant constant) {
    constexpr double kT = kTwoPi * 1e4;
    constexpr double kDelta = 1e-6;
    std::vector<ContinuityRow> rows;
    for (MeanTheorem theorem : {MeanTheorem::WeightedMean, MeanTheorem::UnweightedMean}) {
        const auto value_at = [&](double sigma) {
            return theorem == MeanTheorem::WeightedMean ? predict_weighted(sigma, constant).evaluate(kT)
                                                        : predict_unweighted(sigma).evaluate(kT);
        };
        for (double b : {0.25, 0.5, 1.0, 2.0}) {
            ContinuityRow r;
            r.theorem = theorem;
            r.boundary = b;
            r.left = regime_of(b - kDelta, theorem);
            r.at = regime_of(b, theorem);
            r.right = regime_of(b + kDelta, theorem);
            r.left_value = value_at(b - kDelta);
            r.at_value = value_at(b);
            r.right_value = value_at(b + kDelta);
            r.jump = std::max(std::abs(r.left_value - r.at_value), std::abs(r.right_value - r.at_value));
            rows.push_back(r);
        }
    }
    return rows;
}

}  // namespace auxmean
