#pragma once

#include "horo/config.hpp"
#include "horo/profile.hpp"
#include "horo/quadrature.hpp"

namespace horo {

/// Right-sided Riemann-Liouville integral
///   (I_-^alpha psi)(r) = (1/Gamma(alpha)) int_r^inf psi(s) (s-r)^{alpha-1} ds.
/// The substitution s = r + sig^2 removes the endpoint singularity for
/// alpha >= 1/2; smaller alpha falls back to tanh-sinh.  Truncation comes
/// from the profile tail (DivergenceError when it cannot pay for the kernel
/// growth).
Estimate rl_integral_minus(const Profile1D& psi, double r, double alpha,
                           const QuadratureSpec& spec);

/// Abel-type forward kernel
///   psi(s) = 2^{d/2} sigma_{d-1} int_1^s phi(r) (s-r)^{d/2-1} / sqrt(r^2-1) dr,
/// with both endpoint singularities removed by square-root substitutions.
Estimate abel_forward_sqrt(const Profile1D& phi, double s, int d, const QuadratureSpec& spec);

/// Inverse of I_-^{d/2} on good functions:
///   even d = 2m:  (-1)^m psi^{(m)}(s);
///   odd  d = 2m-1: (-1)^m s^{1/2} d/ds [ s^{1/2} I_-^{1/2}( u^{-1} psi^{(m-1)}(u) ) ](s).
/// Sampled profiles admit m <= 2 only (spline differentiation limit).
double frac_derivative_minus(const Profile1D& psi, double s, int d, const QuadratureSpec& spec);

/// Alternative form of the odd branch,
///   (-1)^m s^{1/2} (d/ds)^m [ s^{m-1/2} I_-^{1/2}( u^{-m} psi(u) ) ](s),
/// kept as a cross-check of frac_derivative_minus.
double frac_derivative_minus_alt(const Profile1D& psi, double s, int d,
                                 const QuadratureSpec& spec);

}  // namespace horo
