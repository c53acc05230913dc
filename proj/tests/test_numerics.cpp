#include <cmath>

#include "doctest.h"
#include "horo/profile.hpp"
#include "horo/quadrature.hpp"
#include "horo/spline.hpp"

using namespace horo;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    const auto& [x, w] = gauss_legendre(8);
    double m0 = 0.0, m2 = 0.0, m14 = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        m0 += w[i];
        m2 += w[i] * x[i] * x[i];
        m14 += w[i] * std::pow(x[i], 14);
    }
    CHECK(m0 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(m2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(m14 == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
}

TEST_CASE("quadrature schemes agree on a smooth integral") {
    QuadratureSpec spec;
    auto f = [](double t) { return std::exp(-t) * std::sin(3.0 * t); };
    // antiderivative e^{-t}(-sin 3t - 3 cos 3t)/10
    const double F2 = std::exp(-2.0) * (-std::sin(6.0) - 3.0 * std::cos(6.0)) / 10.0;
    const double F0 = -3.0 / 10.0;
    const double ref = F2 - F0;
    spec.scheme = QuadScheme::GaussLegendreComposite;
    CHECK(integrate(f, 0.0, 2.0, spec).value == doctest::Approx(ref).epsilon(1e-10));
    spec.scheme = QuadScheme::AdaptiveSimpson;
    CHECK(integrate(f, 0.0, 2.0, spec).value == doctest::Approx(ref).epsilon(1e-8));
    spec.scheme = QuadScheme::TanhSinh;
    CHECK(integrate(f, 0.0, 2.0, spec).value == doctest::Approx(ref).epsilon(1e-10));
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
    QuadratureSpec spec;
    // int_0^1 log(x) dx = -1
    CHECK(integrate_tanh_sinh([](double x) { return std::log(x); }, 0.0, 1.0, spec).value ==
          doctest::Approx(-1.0).epsilon(1e-10));
    // int_0^1 x^{-1/2} dx = 2
    CHECK(integrate_tanh_sinh([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, spec).value ==
          doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("box integration matches separable product") {
    QuadratureSpec spec;
    auto F = [](const double* w) { return std::exp(-(w[0] * w[0] + w[1] * w[1])); };
    const double one_d = std::sqrt(M_PI) * std::erf(3.0);
    CHECK(integrate_box(F, 2, 3.0, spec).value ==
          doctest::Approx(one_d * one_d).epsilon(1e-10));
}

TEST_CASE("finite differences hit analytic derivatives") {
    auto f = [](double x) { return std::sin(x); };
    CHECK(nth_derivative(f, 0.7, 1, 1e-3) == doctest::Approx(std::cos(0.7)).epsilon(1e-10));
    CHECK(nth_derivative(f, 0.7, 2, 1e-3) == doctest::Approx(-std::sin(0.7)).epsilon(1e-7));
    CHECK(nth_derivative(f, 0.7, 3, 2e-2) == doctest::Approx(-std::cos(0.7)).epsilon(1e-5));
    CHECK(nth_derivative(f, 0.7, 4, 3e-2) == doctest::Approx(std::sin(0.7)).epsilon(1e-4));
}

TEST_CASE("richardson removes the leading error terms") {
    // D(eps) = 5 + 3 eps + 2 eps^2, eps_j = 0.4 * 2^{-j}
    std::vector<double> vals;
    for (int j = 0; j <= 5; ++j) {
        const double eps = 0.4 * std::pow(2.0, -j);
        vals.push_back(5.0 + 3.0 * eps + 2.0 * eps * eps);
    }
    const auto res = richardson_extrapolate(vals);
    CHECK(res.limit == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("cubic spline reproduces smooth samples and derivatives") {
    std::vector<double> xs, ys;
    for (int i = 0; i <= 200; ++i) {
        const double x = i / 50.0;
        xs.push_back(x);
        ys.push_back(std::exp(-x) * std::cos(x));
    }
    CubicSpline s(xs, ys);
    const double x = 1.37;
    CHECK(s(x) == doctest::Approx(std::exp(-x) * std::cos(x)).epsilon(1e-8));
    const double d_ref = -std::exp(-x) * (std::cos(x) + std::sin(x));
    CHECK(s.derivative(x) == doctest::Approx(d_ref).epsilon(1e-5));
}

TEST_CASE("tail bounds produce safe truncation points") {
    const TailBound exp_tail = TailBound::exponential(2.0, 1.0);
    const double S = exp_tail.truncation_point(1e-10, 1.0);
    CHECK(std::exp(-2.0 * (S - 1.0)) * S < 1e-9);
    const TailBound comp = TailBound::compact(3.5);
    CHECK(comp.truncation_point(1e-10) == doctest::Approx(3.5));
    CHECK_THROWS_AS(TailBound{}.truncation_point(1e-10), DivergenceError);
}

TEST_CASE("profile derivative clamps the stencil near the domain edge") {
    auto p = Profile1D::analytic([](double s) { return (s - 1.0) * (s - 1.0); },
                                 TailBound::compact(10.0));
    CHECK(p.derivative(1.003, 1) == doctest::Approx(2.0 * 0.003).epsilon(1e-6));
}
