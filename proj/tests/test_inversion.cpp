#include <cmath>

#include "doctest.h"
#include "horo/inversion.hpp"
#include "horo/special.hpp"
#include "test_util.hpp"

using namespace horo;

namespace {

QuadratureSpec spec_of(double rel, double abs) {
    QuadratureSpec spec;
    spec.rel_tolerance = rel;
    spec.abs_tolerance = abs;
    return spec;
}

LorentzElement shift_along_axis(int n, double r) {
    return make_a(r, n);
}

}  // namespace

TEST_CASE("potential spec flags the excluded orders") {
    CHECK(potential_spec(3, 3.0).excluded);
    CHECK(potential_spec(2, 2.0).excluded);
    CHECK_FALSE(potential_spec(3, 2.0).excluded);
    CHECK(potential_spec(3, 2.0).zeta == doctest::Approx(1.0 / (4.0 * M_PI)));
    CHECK_THROWS_AS(potential_q_alpha(zero_field(3), origin(3), 3.0, spec_of(1e-8, 1e-10)),
                    std::invalid_argument);
}

TEST_CASE("potential of the zero field vanishes") {
    const auto spec = spec_of(1e-9, 1e-11);
    CHECK(potential_q_alpha(zero_field(3), origin(3), 2.0, spec).value == doctest::Approx(0.0));
    CHECK(potential_q_n_log(zero_field(3), origin(3), spec).value == doctest::Approx(0.0));
    CHECK(operator_b(zero_field(4), origin(4), spec).value == doctest::Approx(0.0));
}

TEST_CASE("zonal fast path against the general spherical-mean route") {
    const auto spec = spec_of(1e-10, 1e-12);
    const int n = 3;
    const auto field = zonal_field(n, zonal_exp_profile(1.0));
    const double fast = potential_q_alpha_zonal_origin(*field.zonal, n, 2.0, spec).value;

    // force the general path through a nearby off-origin probe
    const double general = potential_q_alpha(field, radial_probe(n, 1e-7), 2.0, spec).value;
    CHECK(std::abs(fast - general) < 1e-5 * std::max(1.0, std::abs(fast)));

    // and through an opaque field evaluated at the origin
    auto opaque = field;
    opaque.zonal = nullptr;
    CHECK(std::abs(potential_q_alpha(opaque, origin(n), 2.0, spec).value - fast) <
          1e-5 * std::max(1.0, std::abs(fast)));
}

TEST_CASE("backprojection identity with the potential") {
    const auto spec = spec_of(1e-8, 1e-10);
    const auto tight = spec_of(1e-11, 1e-13);
    const int n = 3;
    const auto exp_field = zonal_field(n, zonal_exp_profile(1.0));
    const auto bump_field =
        shifted_zonal_field(ball_bump_profile(1.1), shift_along_axis(n, 0.4));
    const std::vector<double> probes = {0.0, 0.3, 0.6, 0.9, 1.3};

    for (const auto* field : {&exp_field, &bump_field}) {
        for (int d : {1, 2}) {
            const auto img = image_of(*field, d, tight);
            const double c = backprojection_constant(n, d);
            double ref_scale = 0.0;
            std::vector<double> lhs(probes.size()), rhs(probes.size());
            for (size_t i = 0; i < probes.size(); ++i) {
                const auto x = radial_probe(n, probes[i]);
                lhs[i] = check_operator(img, x, spec).value;
                rhs[i] = c * potential_q_alpha(*field, x, d, spec).value;
                ref_scale = std::max(ref_scale, std::abs(rhs[i]));
            }
            for (size_t i = 0; i < probes.size(); ++i)
                CHECK(std::abs(lhs[i] - rhs[i]) < 1e-3 * ref_scale);
        }
    }
}

TEST_CASE("logarithmic potential against an independent 1D oracle") {
    const auto spec = spec_of(1e-10, 1e-12);
    const int n = 2;
    const auto f0 = ball_bump_profile(1.0);
    const auto field = zonal_field(n, f0);
    // zeta'_2 sigma_1 int f0(1+tau) log(tau) dtau via the y = log(tau) chart
    auto integrand = [&](double y) {
        const double tau = std::exp(y);
        return (*f0)(1.0 + tau) * y * tau;
    };
    const double oracle = potential_zeta_log(n) * sphere_area(n - 1) *
                          integrate(integrand, -40.0, std::log(1.0), spec).value;
    CHECK(potential_q_n_log(field, origin(n), spec).value ==
          doctest::Approx(oracle).epsilon(1e-7));
}

TEST_CASE("the logarithmic potential satisfies the descent identity") {
    // D_n Q^n f = Q^{n-2} f + B f at radial probes for n = 4
    const auto spec = spec_of(1e-11, 1e-13);
    const int n = 4;
    const auto field = zonal_field(n, ball_bump_profile(1.2));
    const auto Qn = Profile1D::analytic(
        [&](double s) {
            return potential_q_n_log(field, radial_probe(n, std::acosh(s)), spec).value;
        },
        TailBound{});
    double scale = 0.0;
    std::vector<double> lhs, rhs;
    for (double s : {1.05, 1.2, 1.45, 1.8, 2.2}) {
        lhs.push_back(d_alpha_radial(Qn, s, n, n));
        const double q2 = potential_q_alpha(field, radial_probe(n, std::acosh(s)), n - 2.0,
                                            spec).value;
        const double bf = operator_b(field, radial_probe(n, std::acosh(s)), spec).value;
        rhs.push_back(q2 + bf);
        scale = std::max(scale, std::abs(rhs.back()));
    }
    for (size_t i = 0; i < lhs.size(); ++i) CHECK(std::abs(lhs[i] - rhs[i]) < 2e-3 * scale);
}

TEST_CASE("the smooth-kernel operator is an eigenfunction of the Laplacian") {
    const auto spec = spec_of(1e-11, 1e-13);
    const int n = 4;
    const auto field = zonal_field(n, ball_bump_profile(1.2));
    const auto B = Profile1D::analytic(
        [&](double s) {
            return operator_b(field, radial_probe(n, std::acosh(s)), spec).value;
        },
        TailBound{});
    const double eig = 0.25 * n * (n - 2.0);
    double bmax = 0.0;
    for (double s : {1.05, 1.3, 1.7, 2.1}) bmax = std::max(bmax, std::abs(B(s)));
    for (double s : {1.05, 1.3, 1.7, 2.1}) {
        CHECK(std::abs(-beltrami_radial(B, s, n) - eig * B(s)) < 1e-3 * bmax);
        // both descent operators annihilate it
        CHECK(std::abs(d_alpha_radial(B, s, n, n)) < 1e-3 * bmax);
        CHECK(std::abs(d_alpha_radial(B, s, n, n - 2.0)) < 1e-3 * bmax);
    }
}

TEST_CASE("radial Laplacian basics") {
    const auto constant = Profile1D::analytic([](double) { return 4.2; }, TailBound{});
    CHECK(std::abs(beltrami_radial(constant, 1.7, 3)) < 1e-8);
    const auto linear = Profile1D::analytic([](double s) { return s; }, TailBound{});
    for (int n : {2, 3, 5})
        CHECK(beltrami_radial(linear, 1.9, n) == doctest::Approx(n * 1.9).epsilon(1e-6));
}

TEST_CASE("grid application of Laplacian polynomials") {
    const auto spec = spec_of(1e-11, 1e-13);
    const int n = 4;

    SUBCASE("zero profile maps to zero") {
        LaplacePolynomial P = laplace_poly_general(n, 2);
        const auto out = apply_laplace_polynomial_grid(
            P, [](double) { return 0.0; }, 2.0, 0.02);
        CHECK(std::abs(out(1.3)) == doctest::Approx(0.0));
    }

    SUBCASE("eigenprofile is rescaled by its eigenvalue") {
        const auto field = zonal_field(n, ball_bump_profile(1.2));
        LaplacePolynomial P;  // plain Delta_H
        P.n = n;
        P.shifts = {0.0};
        const auto B_at_r = [&](double r) {
            return operator_b(field, radial_probe(n, r), spec).value;
        };
        const auto out = apply_laplace_polynomial_grid(P, B_at_r, 2.2, 0.02);
        const double eig = -0.25 * n * (n - 2.0);
        double bmax = 0.0;
        for (double r : {0.0, 0.4, 0.9, 1.4}) bmax = std::max(bmax, std::abs(B_at_r(r)));
        for (double r : {0.0, 0.4, 0.9, 1.4})
            CHECK(std::abs(out(std::cosh(r)) - eig * B_at_r(r)) < 2e-3 * bmax);
    }
}

TEST_CASE("descent recursion of the potential family") {
    const auto spec = spec_of(1e-10, 1e-12);
    const std::vector<double> probes = {0.0, 0.35, 0.7, 1.05};

    SUBCASE("alpha = 2 recovers the field for n = 3") {
        const auto field = zonal_field(3, ball_bump_profile(1.2));
        CHECK(d_alpha_recursion_residual(field, 2.0, probes, spec) < 1e-3);
    }
    SUBCASE("zero field") {
        CHECK(d_alpha_recursion_residual(zero_field(3), 2.0, probes, spec) ==
              doctest::Approx(0.0));
    }
    SUBCASE("alpha = 4 descends one rung for n = 5") {
        const auto field = zonal_field(5, ball_bump_profile(1.2));
        CHECK(d_alpha_recursion_residual(field, 4.0, probes, spec) < 1e-3);
    }
}

TEST_CASE("composed recursion chain recovers the field") {
    // D_2 D_4 Q^4 f = f for n = 5 via the general polynomial machinery
    const auto spec = spec_of(1e-10, 1e-12);
    const int n = 5;
    const auto field = zonal_field(n, ball_bump_profile(1.2));
    LaplacePolynomial P = laplace_poly_general(n, 2);
    auto q4_at_r = [&](double r) {
        return potential_q_alpha(field, radial_probe(n, r), 4.0, spec).value;
    };
    const auto rec = apply_laplace_polynomial_grid(P, q4_at_r, 1.6, 0.02);
    double sup = 0.0;
    for (double r : {0.0, 0.3, 0.6, 0.9}) {
        sup = std::max(sup, std::abs(rec(std::cosh(r)) - field(radial_probe(n, r))));
    }
    CHECK(sup < 1e-2);
}

TEST_CASE("n = 2 bookkeeping identity for the logarithmic potential") {
    // -Delta_H Q^2 f = f - (1/4pi) int f for n = 2
    const auto spec = spec_of(1e-11, 1e-13);
    const int n = 2;
    const auto field = zonal_field(n, ball_bump_profile(1.0));
    const double mass = radial_measure_integral(*field.zonal, n, spec).value;
    LaplacePolynomial P = laplace_poly_general(2, 1);  // -Delta_H
    auto q2_at_r = [&](double r) {
        return potential_q_n_log(field, radial_probe(n, r), spec).value;
    };
    const auto lhs = apply_laplace_polynomial_grid(P, q2_at_r, 1.5, 0.02);
    double resid = 0.0;
    for (double r : {0.0, 0.3, 0.6, 0.9}) {
        const double rhs = field(radial_probe(n, r)) - mass / (4.0 * M_PI);
        resid = std::max(resid, std::abs(lhs(std::cosh(r)) - rhs));
    }
    CHECK(resid < 1e-2);
}

TEST_CASE("mean-value inversion") {
    const auto spec = spec_of(1e-8, 1e-10);
    const auto tight = spec_of(1e-11, 1e-13);
    const int n = 3;

    SUBCASE("zero image reconstructs zero") {
        const auto img = image_of(zero_field(n), 1, tight);
        QuadratureSpec zspec = spec;
        zspec.truncation_radius = 2.0;
        CHECK(std::abs(invert_mean_value(img, origin(n), 1, ExtrapolationRule::Richardson,
                                         zspec)) < 1e-8);
    }

    SUBCASE("zonal exponential at the origin") {
        const auto field = zonal_field(n, zonal_exp_profile(1.0));
        for (int d : {1, 2}) {
            const auto img = image_of(field, d, tight);
            const double rec =
                invert_mean_value(img, origin(n), d, ExtrapolationRule::Richardson, spec);
            CHECK(std::abs(rec - 1.0) < 1e-2);
        }
    }

    SUBCASE("shifted bump off the origin, with diagnostics") {
        const auto field =
            shifted_zonal_field(ball_bump_profile(1.1), shift_along_axis(n, 0.4));
        const auto img = image_of(field, 1, tight);
        InversionDiagnostics diag;
        const auto x = radial_probe(n, 0.6);
        const double rec =
            invert_mean_value(img, x, 1, ExtrapolationRule::Richardson, spec, {}, &diag);
        CHECK(std::abs(rec - field(x)) < 5e-2);
        CHECK(diag.node_values.size() == 7);
        CHECK(diag.extrapolants.size() == 7);
    }
}

TEST_CASE("even-d polynomial inversion") {
    const auto spec = spec_of(1e-9, 1e-11);
    const auto tight = spec_of(1e-12, 1e-13);
    const int n = 3, d = 2;
    const auto f0 = ball_bump_profile(1.2);
    const auto field = zonal_field(n, f0);
    const auto img = image_of(field, d, tight);
    const std::vector<double> probes = {0.0, 0.25, 0.5, 0.8, 1.1};
    const auto rep = invert_poly_even_d(img, probes, [&](double s) { return (*f0)(s); }, spec);
    CHECK(rep.sup_error < 1e-2);
    CHECK(rep.reconstructed.size() == probes.size());
}

TEST_CASE("general polynomial inversion for odd n") {
    const auto spec = spec_of(1e-9, 1e-11);
    const auto tight = spec_of(1e-12, 1e-13);
    const int n = 3, d = 1;
    const auto f0 = ball_bump_profile(1.2);
    const auto field = zonal_field(n, f0);
    const auto img = image_of(field, d, tight);
    const std::vector<double> probes = {0.0, 0.3, 0.6, 0.9};
    const auto rep =
        invert_poly_general(img, 1, probes, [&](double s) { return (*f0)(s); }, spec);
    CHECK(rep.sup_error < 2e-2);
}

TEST_CASE("general polynomial inversion for n = 2 with a zero-mean field") {
    const auto spec = spec_of(1e-9, 1e-11);
    const auto tight = spec_of(1e-12, 1e-13);
    const int n = 2, d = 1;
    const auto f0 = zero_mean_bump_profile(n, 1.1, 0.7);
    const auto field = zonal_field(n, f0);
    const auto img = image_of(field, d, tight);
    const std::vector<double> probes = {0.0, 0.3, 0.6, 0.9};
    const auto rep =
        invert_poly_general(img, 1, probes, [&](double s) { return (*f0)(s); }, spec);
    CHECK(rep.sup_error < 2e-2);
}

TEST_CASE("mean-value and polynomial reconstructions agree within budgets") {
    const auto spec = spec_of(1e-8, 1e-10);
    const auto tight = spec_of(1e-12, 1e-13);
    const int n = 3, d = 2;
    const auto f0 = ball_bump_profile(1.2);
    const auto field = zonal_field(n, f0);
    const auto img = image_of(field, d, tight);
    const double r = 0.5;
    InversionDiagnostics diag;
    const double mv = invert_mean_value(img, radial_probe(n, r), d,
                                        ExtrapolationRule::Richardson, spec, {}, &diag);
    const auto rep = invert_poly_even_d(img, {r}, {}, spec);
    const double budget = diag.extrapolation + diag.differentiation +
                          rep.budget.differentiation + 1e-2;
    CHECK(std::abs(mv - rep.reconstructed[0]) < budget);
}
