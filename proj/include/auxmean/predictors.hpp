#pragma once

#include <string>
#include <vector>

#include "auxmean/config.hpp"

namespace auxmean {

enum class MeanTheorem { WeightedMean, UnweightedMean };

// Cases of the piecewise mean-value formulas. Weighted regimes cover
// sigma >= 0 (six cases) and sigma < 0; unweighted regimes are the seven
// cases of the unweighted formula.
enum class Regime {
    WeightedNegative,         // sigma < 0
    WeightedLow,              // 0 <= sigma <= 1/4
    WeightedQuarterHalf,      // 1/4 < sigma < 1/2
    WeightedHalf,             // sigma = 1/2
    WeightedHalfOne,          // 1/2 < sigma < 1
    WeightedOneTwo,           // 1 <= sigma <= 2
    WeightedAboveTwo,         // sigma > 2
    UnweightedLow,            // sigma <= 1/4
    UnweightedQuarterHalf,    // 1/4 < sigma < 1/2
    UnweightedHalf,           // sigma = 1/2
    UnweightedHalfOne,        // 1/2 < sigma < 1
    UnweightedOne,            // sigma = 1
    UnweightedOneTwo,         // 1 < sigma < 2
    UnweightedTwoAndAbove,    // sigma >= 2
};

std::string regime_label(Regime r);
Regime regime_of(double sigma, MeanTheorem theorem);

// coefficient * (T/2pi)^power * log^log_power(T/2pi)
struct MainTerm {
    double coefficient = 0.0;
    double power = 0.0;
    int log_power = 0;
};

struct Prediction {
    std::vector<MainTerm> main_terms;
    double error_exponent = 0.0;      // O(T^error_exponent)
    bool log_factor_in_error = false;  // extra sqrt(log T) in the O-term
    Regime regime = Regime::WeightedLow;

    double evaluate(double T) const;
    /// T^error_exponent, times sqrt(log T) when flagged.
    double error_scale(double T) const;
};

/// (1/T) int_1^T |R(sigma+it)|^2 (t/2pi)^sigma dt, main terms by regime.
Prediction predict_weighted(double sigma, HalfLineConstant constant = HalfLineConstant::Derived);

/// (1/T) int_1^T |R(sigma+it)|^2 dt, main terms by regime.
Prediction predict_unweighted(double sigma);

Prediction predict(double sigma, bool weighted, HalfLineConstant constant = HalfLineConstant::Derived);

/// The sigma = 1/2 weighted constant: 2(3 gamma - 1)/9 (Derived) or
/// 2(3 gamma - 4)/9 (Stated).
double half_line_constant(HalfLineConstant which);

/// (2 eps)^{-3/2} / (1 - 2 sigma), sigma < 1/2.
double predict_laplace_weighted(double sigma, double epsilon);

/// (1/2 eps) (2 pi eps)^{sigma - 1/2} Gamma(1/2 - sigma), sigma < 1/2.
double predict_laplace_unweighted(double sigma, double epsilon);

/// int_1^inf t^a e^{-eps t} dt = Gamma(1+a)/eps^{1+a}
///   + sum_{n>=1} (-1)^n eps^{n-1} / ((n-1)! (a+n)),  a > 0, 0 < eps <= 1.
double exp_poly_integral(double a, double epsilon);

// Main-term sum just left of, at, and just right of a regime boundary,
// evaluated at T = 2 pi 10^4. Jumps are recorded, not judged.
struct ContinuityRow {
    MeanTheorem theorem = MeanTheorem::WeightedMean;
    double boundary = 0.0;
    Regime left = Regime::WeightedLow;
    Regime at = Regime::WeightedLow;
    Regime right = Regime::WeightedLow;
    double left_value = 0.0;
    double at_value = 0.0;
    double right_value = 0.0;
    double jump = 0.0;  // max deviation of the one-sided values from at_value
};

std::vector<ContinuityRow> continuity_audit(HalfLineConstant constant = HalfLineConstant::Derived);

}  // namespace auxmean
