#pragma once

#include <cmath>

#include "horo/config.hpp"

namespace horo {

/// Surface area of the unit sphere S^m in R^{m+1}.  sphere_area(0) = 2.
double sphere_area(int m);

/// Digamma function psi(z) = Gamma'(z)/Gamma(z).
double digamma(double z);

/// True iff alpha hits a pole of the potential-family normalization,
/// i.e. alpha - n is a nonnegative even integer.
bool is_excluded_alpha(int n, double alpha);

/// Normalization of the potential family Q^alpha:
///   Gamma((n-alpha)/2) / (2^{alpha/2+1} pi^{n/2} Gamma(alpha/2)).
/// Throws std::invalid_argument for alpha <= 0 or excluded alpha.
double potential_zeta(int n, double alpha);

/// Normalization of the logarithmic potential Q^n:
///   -2^{-1-n/2} / (pi^{n/2} Gamma(n/2)).
double potential_zeta_log(int n);

/// Constant of the zonal Abel form of the d-horospherical transform:
///   2^{d/2-1} sigma_{d-1} Gamma(d/2).
double zonal_abel_constant(int d);

/// Constant in the backprojection identity  (f-hat)-check = c Q^d f:
///   2^d pi^{d/2} Gamma(n/2) / Gamma((n-d)/2).
double backprojection_constant(int n, int d);

/// Normalization c_alpha of the weighted dual family H*^alpha:
///   Gamma((n-alpha-d)/2) / (2^{alpha/2+d+1} pi^{d/2} Gamma(alpha/2) Gamma(n/2)).
/// Throws for alpha <= 0 or alpha+d-n in {0,2,4,...}.
double dual_weight_constant(int n, int d, double alpha);

/// Normalization of the logarithmic dual operator H*^{n-d}:
///   -1 / (2^{(n+d)/2+1} pi^{d/2} Gamma(n/2) Gamma((n-d)/2)).
double dual_log_constant(int n, int d);

/// Constant c_1 of the weighted zonal identity:
///   2^{d/2} sigma_{d-1} Gamma(alpha/2) Gamma(d/2) / (sigma_{n-1} Gamma((alpha+d)/2)).
double weighted_identity_constant(int n, int d, double alpha);

/// Plain-kernel tail constant:  2^{d/2} pi^{(d-n)/2} Gamma((n-d)/2).
double dual_plain_tail_constant(int n, int d);

/// gamma_{n,d} = (psi(n/2) - psi((n-d)/2)) / (2^{n/2+1} pi^{n/2} Gamma(n/2)).
double dual_log_gamma(int n, int d);

/// gamma-tilde_{n,d} = gamma_{n,d} / dual_plain_tail_constant(n,d).
double dual_log_gamma_tilde(int n, int d);

/// Leading constant of the even-d polynomial inversion:
///   (-1)^{d/2} Gamma((n-d)/2) / (2^d pi^{d/2} Gamma(n/2)).
double poly_even_constant(int n, int d);

}  // namespace horo
