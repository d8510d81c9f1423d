#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "auxmean/errors.hpp"
#include "auxmean/special_functions.hpp"
#include "check.hpp"

using namespace auxmean;

TEST_CASE("real zeta closed forms") {
    CHECK(close(real_zeta(2.0).value, kPi * kPi / 6.0, 1e-13));
    CHECK(close(real_zeta(4.0).value, std::pow(kPi, 4) / 90.0, 1e-13));
    CHECK(close(real_zeta(-1.0).value, -1.0 / 12.0, 1e-13));
    CHECK(real_zeta(-2.0).value == 0.0);
    CHECK(close(real_zeta(0.0).value, -0.5, 1e-14));
}

TEST_CASE("real zeta against the high-precision table") {
    CHECK(close(real_zeta(3.0).value, 1.2020569031595942854, 1e-12));
    CHECK(close(real_zeta(0.5).value, -1.4603545088095868129, 1e-12));
    CHECK(close(real_zeta(-2.5).value, 0.0085169287778503305424, 1e-12));
}

TEST_CASE("real zeta error bound covers a stricter recomputation") {
    for (double s : {3.0, 0.5, -2.5, 1.5, 7.25}) {
        const auto r = real_zeta(s);
        CHECK(r.abs_error_bound >= 0.0);
        CHECK(std::isfinite(r.abs_error_bound));
        CHECK(std::abs(r.value - complex_zeta(cplx(s, 0.0)).value.real()) <= r.abs_error_bound + 1e-10);
    }
}

TEST_CASE("real zeta pole proximity") {
    CHECK_THROWS_AS(real_zeta(1.0), PoleError);
    CHECK_THROWS_AS(real_zeta(1.0 + 5e-7), PoleError);
    CHECK_NOTHROW(real_zeta(1.0 + 2e-6));
}

TEST_CASE("euler gamma from zeta near its pole") {
    const double h = 1e-5;
    const double g = real_zeta(1.0 + h).value - 1.0 / h;
    CHECK(close(g, euler_gamma(), 1e-5));
    CHECK(euler_gamma() == 0.5772156649015329);
}

TEST_CASE("complex zeta") {
    CHECK(close(complex_zeta(cplx(0.0, 0.0)).value, cplx(-0.5, 0.0), 1e-13));
    CHECK(close(complex_zeta(cplx(2.0, 0.0)).value, cplx(kPi * kPi / 6.0, 0.0), 1e-13));
    CHECK(close(complex_zeta(cplx(2.0, 3.0)).value, cplx(0.79802198514627572062, -0.11374430805293850022), 1e-11));
    CHECK(close(complex_zeta(cplx(0.5, 30.0)).value, cplx(-0.12064228759004369991, -0.58369121476370628876), 1e-10));
    CHECK(close(complex_zeta(cplx(-1.5, 10.0)).value, cplx(2.9131935600100726483, 0.30752607581256081588), 1e-10));
    CHECK(std::abs(complex_zeta(cplx(0.5, 14.134725141734695)).value) < 1e-6);
    CHECK(complex_zeta(cplx(0.5, 30.0)).abs_error_bound <= 1e-10);
    CHECK_THROWS_AS(complex_zeta(cplx(0.5, 2e5)), DomainError);
    CHECK_THROWS_AS(complex_zeta(cplx(1.0, 0.0)), PoleError);
}

TEST_CASE("real and complex zeta agree on the real line") {
    for (double sigma = -5.0; sigma <= 5.0; sigma += 0.125) {
        if (sigma == 0.5) {
            continue;
        }
        const double s = 2.0 * sigma;
        CHECK(close(real_zeta(s).value, complex_zeta(cplx(s, 0.0)).value.real(), 1e-10));
    }
}

TEST_CASE("log gamma") {
    CHECK(close(log_gamma(cplx(1.0, 0.0)).value, cplx(0.0, 0.0), 1e-14));
    CHECK(close(log_gamma(cplx(3.0, 4.0)).value, cplx(-1.7566267846037841105, 4.7426644380346579282), 1e-12));
    CHECK(close(log_gamma(cplx(0.25, 50.0)).value, cplx(-78.598880432701842504, 145.20865952425722833), 1e-10));
    CHECK_THROWS_AS(log_gamma(cplx(0.0, 1.0)), DomainError);
}

TEST_CASE("log gamma recurrence on a grid") {
    for (double x = 0.1; x <= 10.0; x += 0.7) {
        for (double y = -50.0; y <= 50.0; y += 6.25) {
            const cplx z(x, y);
            const cplx lhs = std::exp(log_gamma(z + 1.0).value);
            const cplx rhs = z * std::exp(log_gamma(z).value);
            CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
        }
    }
}

TEST_CASE("real gamma") {
    CHECK(close_rel(gamma_real(0.5).value, std::sqrt(kPi), 1e-12));
    CHECK(close_rel(gamma_real(5.0).value, 24.0, 1e-12));
    CHECK(close_rel(gamma_real(-2.5).value, -0.94530872048294188123, 1e-12));
    CHECK(close_rel(gamma_real(0.1).value, 9.5135076986687312858, 1e-12));
    CHECK_THROWS_AS(gamma_real(0.0), PoleError);
    CHECK_THROWS_AS(gamma_real(-3.0), PoleError);
}

TEST_CASE("riemann siegel theta") {
    CHECK(riemann_siegel_theta(0.0).value == 0.0);
    CHECK(riemann_siegel_theta(-37.5).value == -riemann_siegel_theta(37.5).value);
    CHECK(close(riemann_siegel_theta(100.0).value, 87.972165231787219625, 1e-10));
    CHECK(close(riemann_siegel_theta(10.0).value, -3.0670743962898952917, 1e-10));
    CHECK(close(riemann_siegel_theta(1000.0).value, 2034.5464280380316087, 1e-9));
}

TEST_CASE("theta is odd and increasing past t = 10") {
    double previous = riemann_siegel_theta(10.0).value;
    for (double t = 10.5; t <= 2000.0; t *= 1.05) {
        const double v = riemann_siegel_theta(t).value;
        CHECK(v > previous);
        CHECK(riemann_siegel_theta(-t).value == -v);
        previous = v;
    }
}

TEST_CASE("theta series and log gamma branches agree at the switch") {
    for (double t : {39.0, 40.0, 41.0}) {
        const double direct = log_gamma(cplx(0.25, 0.5 * t)).value.imag() - 0.5 * t * std::log(kPi);
        CHECK(close(riemann_siegel_theta(t).value, direct, 1e-11));
    }
}

TEST_CASE("zeta chi satisfies the functional equation") {
    for (cplx s : {cplx(0.3, 5.0), cplx(-1.5, 12.0), cplx(2.5, -3.0)}) {
        const cplx lhs = complex_zeta(s).value;
        const cplx rhs = zeta_chi(s) * complex_zeta(1.0 - s).value;
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
    }
    const double t = 20.0;
    const cplx chi = zeta_chi(cplx(0.5, t));
    CHECK(close(chi, std::polar(1.0, -2.0 * riemann_siegel_theta(t).value), 1e-11));
}
