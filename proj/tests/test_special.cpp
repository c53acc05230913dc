#include <cmath>

#include "doctest.h"
#include "horo/special.hpp"

using namespace horo;

TEST_CASE("sphere areas") {
    CHECK(sphere_area(0) == doctest::Approx(2.0));
    CHECK(sphere_area(1) == doctest::Approx(2.0 * M_PI));
    CHECK(sphere_area(2) == doctest::Approx(4.0 * M_PI));
    CHECK(sphere_area(3) == doctest::Approx(2.0 * M_PI * M_PI));
}

TEST_CASE("excluded parameters of the potential family") {
    CHECK(is_excluded_alpha(3, 3.0));
    CHECK(is_excluded_alpha(3, 5.0));
    CHECK(is_excluded_alpha(2, 2.0));
    CHECK_FALSE(is_excluded_alpha(3, 2.0));
    CHECK_FALSE(is_excluded_alpha(3, 1.0));
    CHECK_FALSE(is_excluded_alpha(5, 4.0));
    CHECK_THROWS_AS(potential_zeta(3, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(potential_zeta(3, -1.0), std::invalid_argument);
}

TEST_CASE("potential normalization values") {
    // zeta_{3,2} = Gamma(1/2) / (2^2 pi^{3/2} Gamma(1)) = 1/(4 pi)
    CHECK(potential_zeta(3, 2.0) == doctest::Approx(1.0 / (4.0 * M_PI)).epsilon(1e-13));
    // zeta'_2 = -2^{-2}/(pi Gamma(1)) = -1/(4 pi)
    CHECK(potential_zeta_log(2) == doctest::Approx(-1.0 / (4.0 * M_PI)).epsilon(1e-13));
}

TEST_CASE("zonal transform constant") {
    // d = 1: 2^{-1/2} sigma_0 Gamma(1/2) = sqrt(2 pi)
    CHECK(zonal_abel_constant(1) == doctest::Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-13));
    // d = 2: sigma_1 = 2 pi
    CHECK(zonal_abel_constant(2) == doctest::Approx(2.0 * M_PI).epsilon(1e-13));
}

TEST_CASE("backprojection constant is coherent with the zonal constant") {
    // c * zeta_{n,d} * sigma_{n-1} = 2^{d/2-1} sigma_{d-1}
    for (int n = 2; n <= 6; ++n) {
        for (int d = 1; d <= n - 1; ++d) {
            const double lhs =
                backprojection_constant(n, d) * potential_zeta(n, d) * sphere_area(n - 1);
            const double rhs = std::pow(2.0, 0.5 * d - 1.0) * sphere_area(d - 1);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("dual family constant equals zeta over the weighted-identity constant") {
    for (int n = 3; n <= 5; ++n) {
        for (int d = 1; d <= n - 1; ++d) {
            for (double alpha : {0.5, 1.0, 1.7}) {
                if (is_excluded_alpha(n, alpha + d)) continue;
                const double expect =
                    potential_zeta(n, alpha + d) / weighted_identity_constant(n, d, alpha);
                CHECK(dual_weight_constant(n, d, alpha) ==
                      doctest::Approx(expect).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("log-kernel constants") {
    for (int n : {2, 3, 4, 5}) {
        for (int d = 1; d <= n - 1; ++d) {
            CHECK(dual_log_gamma_tilde(n, d) ==
                  doctest::Approx(dual_log_gamma(n, d) / dual_plain_tail_constant(n, d))
                      .epsilon(1e-12));
        }
    }
    // n=2, d=1: c_{2,1} = -1/(2^{5/2} pi^{1/2} Gamma(1) Gamma(1/2)) = -1/(2^{5/2} pi)
    CHECK(dual_log_constant(2, 1) ==
          doctest::Approx(-1.0 / (std::pow(2.0, 2.5) * M_PI)).epsilon(1e-12));
}

TEST_CASE("even-d inversion constant") {
    // n=3, d=2: (-1) Gamma(1/2)/(4 pi Gamma(3/2)) = -1/(2 pi)
    CHECK(poly_even_constant(3, 2) == doctest::Approx(-1.0 / (2.0 * M_PI)).epsilon(1e-13));
    // it inverts the backprojection constant up to the sign
    for (int n = 3; n <= 6; ++n)
        for (int d = 2; d <= n - 1; d += 2) {
            const double prod = poly_even_constant(n, d) * backprojection_constant(n, d);
            CHECK(std::abs(prod) == doctest::Approx(1.0).epsilon(1e-12));
        }
}

TEST_CASE("digamma reference values") {
    // psi(1) = -euler_gamma, psi(1/2) = -euler_gamma - 2 log 2
    const double euler = 0.57721566490153286;
    CHECK(digamma(1.0) == doctest::Approx(-euler).epsilon(1e-12));
    CHECK(digamma(0.5) == doctest::Approx(-euler - 2.0 * std::log(2.0)).epsilon(1e-12));
}
