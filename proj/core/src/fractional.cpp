#include "horo/fractional.hpp"

#include <cmath>
#include <stdexcept>

#include "horo/special.hpp"

namespace horo {

namespace {

/// Endpoint-limit convention for substituted singular kernels: profiles may
/// overflow pointwise where the substitution cancels analytically.
double finite_or_zero(double v) { return std::isfinite(v) ? v : 0.0; }

}  // namespace

namespace {

double upper_limit(const Profile1D& psi, double alpha, const QuadratureSpec& spec) {
    const double hi = psi.domain_hi();
    if (std::isfinite(hi)) return hi;
    return psi.tail().truncation_point(0.1 * spec.abs_tolerance, alpha - 1.0);
}

}  // namespace

Estimate rl_integral_minus(const Profile1D& psi, double r, double alpha,
                           const QuadratureSpec& spec) {
    if (alpha <= 0.0) throw std::invalid_argument("rl_integral_minus: alpha must be positive");
    spec.validate();
    const double s_up = upper_limit(psi, alpha, spec);
    Estimate e;
    if (s_up <= r) return e;
    const double norm = 1.0 / std::tgamma(alpha);
    // s = r + sig^2 turns the kernel into sig^{2 alpha - 1}
    auto integrand = [&](double sig) {
        return finite_or_zero(2.0 * psi(r + sig * sig) * std::pow(sig, 2.0 * alpha - 1.0));
    };
    const double sig_up = std::sqrt(s_up - r);
    if (alpha >= 0.5) {
        e = integrate(integrand, 0.0, sig_up, spec);
    } else {
        e = integrate_tanh_sinh(integrand, 0.0, sig_up, spec);
    }
    e.value *= norm;
    e.abs_error *= norm;
    return e;
}

Estimate abel_forward_sqrt(const Profile1D& phi, double s, int d, const QuadratureSpec& spec) {
    if (s <= 1.0) throw std::invalid_argument("abel_forward_sqrt: s must exceed 1");
    if (d < 1) throw std::invalid_argument("abel_forward_sqrt: d must be >= 1");
    spec.validate();
    const double c = std::pow(2.0, 0.5 * d) * sphere_area(d - 1);
    const double mid = 0.5 * (1.0 + s);
    // left panel, r = 1 + rho^2 removes the 1/sqrt(r^2-1) singularity
    auto left = [&](double rho) {
        const double r = 1.0 + rho * rho;
        return finite_or_zero(2.0 * phi(r) * std::pow(s - r, 0.5 * d - 1.0) /
                              std::sqrt(2.0 + rho * rho));
    };
    // right panel, r = s - sig^2 removes the (s-r)^{d/2-1} singularity
    auto right = [&](double sig) {
        const double r = s - sig * sig;
        return finite_or_zero(2.0 * phi(r) * std::pow(sig, d - 2.0) * sig /
                              std::sqrt(r * r - 1.0));
    };
    Estimate a = integrate_tanh_sinh(left, 0.0, std::sqrt(mid - 1.0), spec);
    Estimate b = integrate_tanh_sinh(right, 0.0, std::sqrt(s - mid), spec);
    Estimate e;
    e.value = c * (a.value + b.value);
    e.abs_error = c * (a.abs_error + b.abs_error);
    e.converged = a.converged && b.converged;
    e.evaluations = a.evaluations + b.evaluations;
    return e;
}

double frac_derivative_minus(const Profile1D& psi, double s, int d, const QuadratureSpec& spec) {
    if (d < 1) throw std::invalid_argument("frac_derivative_minus: d must be >= 1");
    if (d % 2 == 0) {
        const int m = d / 2;
        if (!psi.is_analytic() && m > 2)
            throw std::invalid_argument(
                "frac_derivative_minus: sampled profile too rough for d/2 derivatives");
        const double sign = m % 2 == 0 ? 1.0 : -1.0;
        return sign * psi.derivative(s, m);
    }
    const int m = (d + 1) / 2;
    if (!psi.is_analytic() && m - 1 > 2)
        throw std::invalid_argument(
            "frac_derivative_minus: sampled profile too rough for the odd branch");
    // Inner callable H(x) = x^{1/2} I_-^{1/2}( u^{-1} psi^{(m-1)}(u) )(x)
    const TailBound inner_tail = std::isfinite(psi.domain_hi())
                                     ? TailBound::compact(psi.domain_hi())
                                     : psi.tail();
    auto inner_profile = Profile1D::analytic(
        [&psi, m](double u) {
            const double g = m == 1 ? psi(u) : psi.derivative(u, m - 1);
            return g / u;
        },
        inner_tail, psi.domain_lo());
    auto H = [&](double x) {
        return std::sqrt(x) * rl_integral_minus(inner_profile, x, 0.5, spec).value;
    };
    double h = std::max(1e-5, 2e-3 * std::max(1.0, s));
    if (s - 2.0 * h < psi.domain_lo()) h = (s - psi.domain_lo()) / 2.25;
    if (h <= 0.0)
        throw std::invalid_argument("frac_derivative_minus: point too close to the domain edge");
    const double dH = nth_derivative(H, s, 1, h);
    const double sign = m % 2 == 0 ? 1.0 : -1.0;
    return sign * std::sqrt(s) * dH;
}

double frac_derivative_minus_alt(const Profile1D& psi, double s, int d,
                                 const QuadratureSpec& spec) {
    if (d < 1 || d % 2 == 0)
        throw std::invalid_argument("frac_derivative_minus_alt: d must be odd");
    const int m = (d + 1) / 2;
    const TailBound inner_tail = std::isfinite(psi.domain_hi())
                                     ? TailBound::compact(psi.domain_hi())
                                     : psi.tail();
    auto inner_profile = Profile1D::analytic(
        [&psi, m](double u) { return psi(u) / std::pow(u, m); }, inner_tail, psi.domain_lo());
    auto G = [&](double x) {
        return std::pow(x, m - 0.5) * rl_integral_minus(inner_profile, x, 0.5, spec).value;
    };
    double h = std::max(1e-5, 2e-3 * std::max(1.0, s));
    const int reach = m <= 2 ? 2 : 3;
    if (s - reach * h < psi.domain_lo()) h = (s - psi.domain_lo()) / (reach + 0.25);
    if (h <= 0.0)
        throw std::invalid_argument("frac_derivative_minus_alt: point too close to the domain edge");
    const double dG = nth_derivative(G, s, m, h);
    const double sign = m % 2 == 0 ? 1.0 : -1.0;
    return sign * std::sqrt(s) * dG;
}

}  // namespace horo
