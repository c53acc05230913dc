#include "horo/special.hpp"

#include <boost/math/special_functions/digamma.hpp>

#include <cmath>
#include <stdexcept>

namespace horo {

double sphere_area(int m) {
    if (m < 0) throw std::invalid_argument("sphere_area: m < 0");
    const double k = 0.5 * (m + 1);
    return 2.0 * std::pow(M_PI, k) / std::tgamma(k);
}

double digamma(double z) { return boost::math::digamma(z); }

bool is_excluded_alpha(int n, double alpha) {
    const double diff = alpha - n;
    if (diff < -1e-12) return false;
    const double nearest = 2.0 * std::round(diff / 2.0);
    return std::abs(diff - nearest) < 1e-12;
}

double potential_zeta(int n, double alpha) {
    if (alpha <= 0.0)
        throw std::invalid_argument("potential_zeta: alpha must be positive");
    if (is_excluded_alpha(n, alpha))
        throw std::invalid_argument("potential_zeta: alpha - n is a nonnegative even integer (pole)");
    return std::tgamma(0.5 * (n - alpha)) /
           (std::pow(2.0, 0.5 * alpha + 1.0) * std::pow(M_PI, 0.5 * n) * std::tgamma(0.5 * alpha));
}

double potential_zeta_log(int n) {
    return -std::pow(2.0, -1.0 - 0.5 * n) / (std::pow(M_PI, 0.5 * n) * std::tgamma(0.5 * n));
}

double zonal_abel_constant(int d) {
    return std::pow(2.0, 0.5 * d - 1.0) * sphere_area(d - 1) * std::tgamma(0.5 * d);
}

double backprojection_constant(int n, int d) {
    return std::pow(2.0, d) * std::pow(M_PI, 0.5 * d) * std::tgamma(0.5 * n) /
           std::tgamma(0.5 * (n - d));
}

double dual_weight_constant(int n, int d, double alpha) {
    if (alpha <= 0.0)
        throw std::invalid_argument("dual_weight_constant: alpha must be positive");
    if (is_excluded_alpha(n, alpha + d))
        throw std::invalid_argument("dual_weight_constant: alpha + d - n is a nonnegative even integer (pole)");
    return std::tgamma(0.5 * (n - alpha - d)) /
           (std::pow(2.0, 0.5 * alpha + d + 1.0) * std::pow(M_PI, 0.5 * d) *
            std::tgamma(0.5 * alpha) * std::tgamma(0.5 * n));
}

double dual_log_constant(int n, int d) {
    return -1.0 / (std::pow(2.0, 0.5 * (n + d) + 1.0) * std::pow(M_PI, 0.5 * d) *
                   std::tgamma(0.5 * n) * std::tgamma(0.5 * (n - d)));
}

double weighted_identity_constant(int n, int d, double alpha) {
    return std::pow(2.0, 0.5 * d) * sphere_area(d - 1) * std::tgamma(0.5 * alpha) *
           std::tgamma(0.5 * d) /
           (sphere_area(n - 1) * std::tgamma(0.5 * (alpha + d)));
}

double dual_plain_tail_constant(int n, int d) {
    return std::pow(2.0, 0.5 * d) * std::pow(M_PI, 0.5 * (d - n)) * std::tgamma(0.5 * (n - d));
}

double dual_log_gamma(int n, int d) {
    return (digamma(0.5 * n) - digamma(0.5 * (n - d))) /
           (std::pow(2.0, 0.5 * n + 1.0) * std::pow(M_PI, 0.5 * n) * std::tgamma(0.5 * n));
}

double dual_log_gamma_tilde(int n, int d) {
    return dual_log_gamma(n, d) / dual_plain_tail_constant(n, d);
}

double poly_even_constant(int n, int d) {
    if (d % 2 != 0) throw std::invalid_argument("poly_even_constant: d must be even");
    const double sign = (d / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * std::tgamma(0.5 * (n - d)) /
           (std::pow(2.0, d) * std::pow(M_PI, 0.5 * d) * std::tgamma(0.5 * n));
}

}  // namespace horo
