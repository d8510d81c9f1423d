#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "auxmean/errors.hpp"
#include "auxmean/lemma_oracles.hpp"
#include "auxmean/special_functions.hpp"
#include "check.hpp"

using namespace auxmean;

TEST_CASE("oscillatory integral") {
    CHECK(close(osc_integral(1.0, 2.0, 0.0, kPi), 0.0, 1e-12));
    // one integration by parts: [t sin(10t)/10 + cos(10t)/100]_1^2
    const double by_parts = (2.0 * std::sin(20.0) - std::sin(10.0)) / 10.0 + (std::cos(20.0) - std::cos(10.0)) / 100.0;
    CHECK(close(osc_integral(1.0, 2.0, 1.0, 10.0), by_parts, 1e-12));
    CHECK(close(osc_integral(1.0, 2.0, 1.0, 10.0), 0.2494626971433609566, 1e-12));
    CHECK(close(osc_integral(1.0, 4.0, 2.0, 5.0), 3.1911530297980112642, 1e-11));
    CHECK(close(osc_integral(1.0, 4.0, 2.0, -5.0), osc_integral(1.0, 4.0, 2.0, 5.0), 1e-12));
    CHECK_THROWS_AS(osc_integral(1.0, 2.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(osc_integral(2.0, 1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("lemma 1 bound arithmetic and limits") {
    const BoundCheck c = lemma1_check(1.0, 4.0, 2.0, 5.0);
    CHECK(close(c.rhs_bound, 9.6, 1e-12));
    CHECK(c.lhs <= c.rhs_bound);
    // alpha = 0: ratio = |sin(beta b) - sin(beta a)| / 3
    const double beta = 400.0;
    const BoundCheck big = lemma1_check(1.0, 2.0, 0.0, beta);
    CHECK(close(big.ratio, std::abs(std::sin(2.0 * beta) - std::sin(beta)) / 3.0, 1e-10));
    CHECK(big.ratio <= 2.0 / 3.0);
    const BoundCheck thin = lemma1_check(3.0, 3.0 + 1e-9, 1.0, 2.0);
    CHECK(thin.ratio < 1e-8);
}

TEST_CASE("lemma 1 randomized sweep") {
    const auto checks = lemma1_sweep(20240601, 1000);
    CHECK(checks.size() == 1000);
    for (const auto& c : checks) {
        CHECK(c.ratio <= 1.0);
        CHECK(c.lemma == "lemma1");
    }
    const auto again = lemma1_sweep(20240601, 5);
    CHECK(again[0].inputs == checks[0].inputs);
    CHECK(again[4].lhs == checks[4].lhs);
}

TEST_CASE("partial sums and their asymptotics") {
    CHECK(close(power_sum_partial(10.0, 0.5), 2.9289682539682539683, 1e-13));
    CHECK(close(euler_asymptotic(10.0, 0.5), 2.8798007578955785446, 1e-13));
    CHECK(close(power_sum_partial(1e6, 0.5) - std::log(1e6), euler_gamma(), 1e-6));
    const double x = 1e6;
    CHECK(std::abs(power_sum_partial(x, 1.0) - (kPi * kPi / 6.0 - 1.0 / x)) <= 2.0 / (x * x));
    CHECK(close(euler_asymptotic(10.0, 0.0), 10.0, 1e-12));
    CHECK(close(euler_asymptotic(4.0, 1.0), kPi * kPi / 6.0 - 0.25, 1e-12));
    CHECK_THROWS_AS(power_sum_partial(0.5, 1.0), DomainError);
}

TEST_CASE("scaled residuals stay bounded on doubling grids") {
    for (double sigma : {-1.0, -0.5, 0.25, 0.5, 1.0, 2.0}) {
        std::vector<double> res;
        for (double x : {1e3, 1e4, 1e5, 1e6}) {
            res.push_back(euler_scaled_residual(x, sigma));
        }
        CHECK(bounded_on_grid(res));
    }
    // integer x, sigma = 1: residual x^2 (sum_{n<=x} n^-2 - zeta(2) + 1/x) -> 1/2
    CHECK(close(euler_scaled_residual(1e6, 1.0), 0.5, 1e-5));
}

TEST_CASE("double sums") {
    const BoundCheck one = double_sum_growth(2.0, 0.7, DoubleSumVariant::Lemma3);
    CHECK(close(one.lhs, std::pow(2.0, -0.7) / std::log(2.0), 1e-15));
    CHECK(close(one.lhs, 0.88808296987543146009, 1e-15));
    CHECK_THROWS_AS(double_sum_growth(4000.0, 0.5, DoubleSumVariant::Lemma3), BudgetError);
    CHECK_THROWS_AS(double_sum_growth(100.0, 0.5, DoubleSumVariant::Lemma2), DomainError);

    std::vector<double> lemma2;
    std::vector<double> lemma3;
    for (double x : {250.0, 500.0, 1000.0, 2000.0}) {
        lemma2.push_back(double_sum_growth(x, -1.0, DoubleSumVariant::Lemma2).ratio);
        lemma3.push_back(double_sum_growth(x, 2.0, DoubleSumVariant::Lemma3).lhs);
    }
    CHECK(bounded_on_grid(lemma2));
    for (std::size_t i = 0; i + 1 < lemma2.size(); ++i) {
        CHECK(std::isfinite(lemma2[i] / lemma2[i + 1]));
    }
    CHECK(bounded_on_grid(lemma3));
    CHECK(lemma3.back() < 10.0);
}

TEST_CASE("bounded_on_grid") {
    CHECK(bounded_on_grid({}));
    CHECK(bounded_on_grid({1.0, 2.0, 1.5, 1.9}));
    CHECK_FALSE(bounded_on_grid({1.0, 1.0, 3.0, 9.0}));
    CHECK_FALSE(bounded_on_grid({1.0, NAN}));
}
