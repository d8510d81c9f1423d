#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "auxmean/aux_eval.hpp"
#include "auxmean/cache.hpp"
#include "auxmean/errors.hpp"
#include "auxmean/special_functions.hpp"
#include "check.hpp"

using namespace auxmean;

TEST_CASE("main sum") {
    CHECK(main_sum(0.7, kPi) == cplx(0.0, 0.0));
    CHECK(main_sum(1.0, 3.0 * kTwoPi) == cplx(1.0, 0.0));
    CHECK(close(main_sum(0.0, 8.0 * kPi), cplx(1.1414531068946537441, 0.98994495733341137183), 1e-13));
    CHECK(main_sum_terms(kTwoPi * 4.0) == 2);  // boundary included
    CHECK(main_sum_terms(std::nextafter(kTwoPi * 4.0, 0.0)) == 1);
    CHECK(main_sum_terms(kTwoPi) == 1);
    CHECK(main_sum_terms(6.0) == 0);
}

TEST_CASE("main sum term count changes only at 2 pi n^2") {
    long previous = 0;
    for (double t = 1.0; t < 800.0; t += 0.01) {
        const long n = main_sum_terms(t);
        if (n != previous) {
            CHECK(n == previous + 1);
            CHECK(t >= kTwoPi * n * n);
            CHECK(t - 0.01 < kTwoPi * n * n);
        }
        previous = n;
    }
}

TEST_CASE("contour validation") {
    ContourSpec c;
    CHECK_NOTHROW(validate_contour(c));
    c.direction_angle = -kPi / 4.0;
    CHECK_THROWS_AS(validate_contour(c), DomainError);
    c = ContourSpec{};
    c.crossing = 1.1;
    CHECK_THROWS_AS(validate_contour(c), DomainError);
    c = ContourSpec{};
    c.crossing = -0.5;
    CHECK_THROWS_AS(validate_contour(c), DomainError);
    CHECK(default_contour(100.0).crossing == 3.5);
    CHECK(default_contour(2.0 * kPi * 16.0).crossing == 4.5);
    CHECK_NOTHROW(validate_contour(default_contour(100.0)));
}

TEST_CASE("direct contour against the high-precision table") {
    const struct {
        cplx s;
        cplx expected;
    } cases[] = {
        {{0.5, 20.0}, {0.89694795308596287473, -0.25665972066062571452}},
        {{2.0, 5.0}, {0.60387329258732502104, -0.24973389229956967308}},
        {{0.0, 30.0}, {0.94193970593830755824, -0.69676398972297752754}},
        {{-1.0, 10.0}, {0.71504828069141615428, 0.38192235189518942757}},
    };
    for (const auto& c : cases) {
        const AuxEval r = eval_aux_direct(c.s, default_contour(c.s.imag()));
        CHECK(r.method == AuxMethod::DirectContour);
        CHECK(close(r.value, c.expected, 1e-10));
        CHECK(std::abs(r.value - c.expected) <= r.error_bound + 1e-12);
    }
}

TEST_CASE("defining line through 1/2 gives the same value at moderate t") {
    ContourSpec line;
    line.half_length = 12.0;
    const AuxEval a = eval_aux_direct(cplx(0.5, 20.0), line);
    const AuxEval b = eval_aux_direct(cplx(0.5, 20.0), default_contour(20.0));
    CHECK(close(a.value, b.value, 1e-9));
}

TEST_CASE("step halving stays inside the error bound") {
    ContourSpec c = default_contour(150.0);
    const AuxEval coarse = eval_aux_direct(cplx(0.5, 150.0), c);
    c.nodes_per_unit *= 8;
    const AuxEval fine = eval_aux_direct(cplx(0.5, 150.0), c);
    CHECK(std::abs(coarse.value - fine.value) <= coarse.error_bound + fine.error_bound);
}

TEST_CASE("hardy Z at the first zero and at t = 20") {
    const auto z0 = critical_line_decomposition(14.134725141734695);
    CHECK(std::abs(z0.z_aux) < 1e-3);
    const auto z20 = critical_line_decomposition(20.0);
    CHECK(close(z20.z_aux, 1.1478424121851972776, 1e-10));
    const double zeta_rot =
        (std::polar(1.0, riemann_siegel_theta(30.0).value) * complex_zeta(cplx(0.5, 30.0)).value).real();
    const auto z30 = critical_line_decomposition(30.0);
    CHECK(std::abs(z30.z_aux - zeta_rot) <= z30.error_bound + complex_zeta(cplx(0.5, 30.0)).abs_error_bound + 1e-10);
    CHECK_THROWS_AS(critical_line_decomposition(0.5), DomainError);
}

TEST_CASE("2|R| >= |zeta| on the critical line, equality where Y = 0") {
    double best_y = 1e9;
    double at_best = 0.0;
    for (int k = 0; k < 200; ++k) {
        const double t = 10.0 + 190.0 * k / 199.0;
        const auto parts = critical_line_decomposition(t);
        const double two_r = std::hypot(parts.z_aux, parts.y_aux);
        const double zeta = std::abs(complex_zeta(cplx(0.5, t)).value);
        CHECK(two_r >= zeta - 1e-8);
        if (std::abs(parts.y_aux) < best_y) {
            best_y = std::abs(parts.y_aux);
            at_best = t;
        }
    }
    // refine a sign change of Y by bisection and compare there
    double lo = at_best - 0.5;
    double hi = at_best + 0.5;
    auto y = [](double t) { return critical_line_decomposition(t).y_aux; };
    if (y(lo) * y(hi) < 0.0) {
        for (int i = 0; i < 60; ++i) {
            const double mid = 0.5 * (lo + hi);
            (y(lo) * y(mid) <= 0.0 ? hi : lo) = mid;
        }
        const double t = 0.5 * (lo + hi);
        const auto parts = critical_line_decomposition(t);
        CHECK(close(std::hypot(parts.z_aux, parts.y_aux), std::abs(complex_zeta(cplx(0.5, t)).value), 1e-8));
    }
}

TEST_CASE("cross-validation against the main sum pins orientation") {
    for (double sigma : {0.0, 0.5, 1.0}) {
        for (double t : {50.0, 100.0, 200.0, 500.0}) {
            const cplx d = eval_aux_direct(cplx(sigma, t), default_contour(t)).value;
            const cplx m = main_sum(sigma, t);
            const double scaled = std::abs(d - m) * std::pow(t, 0.5 * sigma);
            CHECK(scaled <= 2.0);
            // not the negative or the conjugate
            CHECK(std::abs(d - m) < std::abs(d + m));
            CHECK(std::abs(d - m) < std::abs(d - std::conj(m)));
        }
    }
}

TEST_CASE("dispatch and continuity at the switch") {
    RunConfig config;
    CHECK(eval_aux(cplx(0.0, 100.0), config).method == AuxMethod::DirectContour);
    const AuxEval far = eval_aux(cplx(0.0, 1e4), config);
    CHECK(far.method == AuxMethod::MainSum);
    CHECK(close(far.error_bound, far.c_model * std::pow(1e4, 0.0), 1e-15));
    const AuxEval below = eval_aux(cplx(0.0, config.t_switch), config);
    const AuxEval above = eval_aux(cplx(0.0, std::nextafter(config.t_switch, 1e9)), config);
    CHECK(below.method == AuxMethod::DirectContour);
    CHECK(above.method == AuxMethod::MainSum);
    CHECK(std::abs(below.value - above.value) <= below.error_bound + above.error_bound);
    CHECK_THROWS_AS(eval_aux(cplx(0.0, -3.0), config), DomainError);
}

namespace {

double scaled_remainder(double sigma, double t) {
    return std::abs(eval_aux_direct(cplx(sigma, t), default_contour(t)).value - main_sum(sigma, t)) *
           std::pow(t, 0.5 * sigma);
}

// sup of the scaled remainder over [a, 2a]: dense scan, then golden-section
// refinement around every sampled local maximum
double window_sup(double sigma, double a) {
    constexpr int K = 400;
    std::vector<double> ts;
    std::vector<double> vs;
    for (int k = 0; k <= K; ++k) {
        ts.push_back(a * std::pow(2.0, static_cast<double>(k) / K));
        vs.push_back(scaled_remainder(sigma, ts.back()));
    }
    double best = std::max(vs.front(), vs.back());
    for (int k = 1; k < K; ++k) {
        if (vs[k] < vs[k - 1] || vs[k] < vs[k + 1]) {
            continue;
        }
        double lo = ts[k - 1];
        double hi = ts[k + 1];
        for (int i = 0; i < 40; ++i) {
            const double m1 = lo + 0.382 * (hi - lo);
            const double m2 = lo + 0.618 * (hi - lo);
            if (scaled_remainder(sigma, m1) < scaled_remainder(sigma, m2)) {
                lo = m1;
            } else {
                hi = m2;
            }
        }
        best = std::max({best, vs[k], scaled_remainder(sigma, 0.5 * (lo + hi))});
    }
    return best;
}

}  // namespace

TEST_CASE("main-sum error model: finite, covered by C_model, window sup not increasing past t = 100") {
    for (double sigma : {0.0, 0.5, 1.0}) {
        const double c = main_sum_error_constant(sigma);
        CHECK(std::isfinite(c));
        CHECK(c > 0.0);
        double previous = INFINITY;
        for (double a : {100.0, 200.0, 400.0, 800.0}) {
            const double sup = window_sup(sigma, a);
            CHECK(std::isfinite(sup));
            CHECK(sup <= previous);
            CHECK(sup <= c);
            previous = sup;
        }
    }
}

TEST_CASE("cache serves direct evaluations") {
    RunConfig config;
    EvalCache cache;
    const AuxEval first = eval_aux(cplx(0.25, 42.0), config, &cache);
    const AuxEval second = eval_aux(cplx(0.25, 42.0), config, &cache);
    CHECK(first.evaluations > 0);
    CHECK(second.evaluations == 0);
    CHECK(first.value == second.value);
    CHECK(first.error_bound == second.error_bound);
    CHECK(cache.hits() == 1);
}
