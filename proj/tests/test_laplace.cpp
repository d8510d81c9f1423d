#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "auxmean/errors.hpp"
#include "auxmean/laplace.hpp"
#include "auxmean/predictors.hpp"
#include "auxmean/special_functions.hpp"
#include "check.hpp"

using namespace auxmean;

namespace {

// t^b on [1, 800] with step 1/32
void synthetic(double b, std::vector<double>& t, std::vector<double>& F) {
    t.clear();
    F.clear();
    for (long k = 0; k <= 799 * 32; ++k) {
        const double x = 1.0 + static_cast<double>(k) / 32.0;
        t.push_back(x);
        F.push_back(std::pow(x, b));
    }
}

}  // namespace

TEST_CASE("zero stream") {
    const std::vector<double> t{1.0, 10.0, 100.0, 1000.0};
    const std::vector<double> F(4, 0.0);
    const LaplaceValue v = laplace_numeric(0.0, 0.1, t, F);
    CHECK(v.numeric == 0.0);
    CHECK(laplace_piecewise_linear({1.0}, {3.0}, 0.1) == 0.0);
}

TEST_CASE("linear F is exact") {
    // F = t - 1 on [1, 2]: eps int_1^2 (t-1) e^{-eps t} dt
    const double e = 0.7;
    const double exact = (std::exp(-e) - std::exp(-2.0 * e) * (1.0 + e)) / e;
    CHECK(close(laplace_piecewise_linear({1.0, 1.5, 2.0}, {0.0, 0.5, 1.0}, e), exact, 1e-15));
}

TEST_CASE("synthetic powers") {
    const double e = 0.05;
    std::vector<double> t;
    std::vector<double> F;
    // eps int_1^inf t^b e^{-eps t} dt; the tail beyond 800 is below 1e-12 relative
    const double ref1 = std::exp(-e) * (1.0 + e) / e;
    const double ref2 = std::exp(-e) * (e * e + 2.0 * e + 2.0) / (e * e);
    const double ref15 = 0.05 * 2377.6103902482715;
    synthetic(1.0, t, F);
    CHECK(close_rel(laplace_numeric(0.0, e, t, F).numeric, ref1, 1e-6));
    synthetic(2.0, t, F);
    CHECK(close_rel(laplace_numeric(0.0, e, t, F).numeric, ref2, 1e-6));
    synthetic(1.5, t, F);
    CHECK(close_rel(laplace_numeric(0.0, e, t, F).numeric, ref15, 1e-6));
}

TEST_CASE("coverage and domain errors") {
    const std::vector<double> t{1.0, 100.0};
    const std::vector<double> F{0.0, 1.0};
    CHECK_THROWS_AS(laplace_numeric(0.0, 0.1, t, F), DomainError);
    CHECK_NOTHROW(laplace_numeric(0.0, 0.4, t, F));
    CHECK_THROWS_AS(laplace_piecewise_linear({1.0, 1.0}, {0.0, 0.0}, 0.1), DomainError);
    RunConfig config;
    CHECK_THROWS_AS(laplace_ratio_scan(0.5, {0.5}, config), DomainError);
    CHECK_THROWS_AS(laplace_ratio_scan(0.0, {0.5}, config, LaplaceTarget::Weighted, nullptr, 30.0), DomainError);
    CHECK_THROWS_AS(laplace_ratio_scan(0.0, {0.25, 0.5}, config), DomainError);
}

TEST_CASE("scan rows") {
    RunConfig config;
    config.thread_budget = 4;
    const auto rows = laplace_ratio_scan(-1.0, {0.5}, config);
    REQUIRE(rows.size() == 1);
    CHECK(close(rows[0].predicted, 1.0 / 3.0, 1e-15));
    CHECK(rows[0].ratio == rows[0].numeric / rows[0].predicted);
    CHECK(rows[0].numeric > 0.0);

    const auto w = laplace_ratio_scan(0.0, {0.5, 0.25}, config, LaplaceTarget::Weighted);
    const auto u = laplace_ratio_scan(0.0, {0.5, 0.25}, config, LaplaceTarget::Unweighted);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(close_rel(w[i].predicted, u[i].predicted, 1e-14));
        CHECK(close_rel(w[i].numeric, u[i].numeric, 1e-14));
    }
}

TEST_CASE("tail bound is negligible with coverage 48") {
    RunConfig config;
    config.thread_budget = 4;
    for (double sigma : {0.0, -1.0}) {
        for (LaplaceTarget target : {LaplaceTarget::Weighted, LaplaceTarget::Unweighted}) {
            for (const auto& r : laplace_ratio_scan(sigma, {0.5, 0.25, 0.1}, config, target, nullptr, 48.0)) {
                CAPTURE(sigma);
                CAPTURE(r.epsilon);
                CHECK(r.tail_bound <= 1e-15 * r.numeric);
            }
        }
    }
}
