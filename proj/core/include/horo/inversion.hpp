#pragma once

#include <functional>
#include <vector>

#include "horo/transform.hpp"

namespace horo {

/// Normalization data of the potential family at a given order.
struct PotentialSpec {
    int n = 0;
    double alpha = 0.0;
    double zeta = 0.0;
    bool excluded = false;  // alpha - n in {0, 2, 4, ...}
};

PotentialSpec potential_spec(int n, double alpha);

/// (Q^alpha f)(x) = zeta_{n,alpha} int f(y) ([x,y]-1)^{(alpha-n)/2} ([x,y]+1)^{1-n/2} dy.
/// In geodesic polar coordinates around x this is
///   zeta sigma_{n-1} int_0^inf (M_x f)(1+tau) tau^{alpha/2-1} dtau,
/// which is how the general path evaluates it; zonal fields probed at the
/// origin take the 1D profile route directly.
Estimate potential_q_alpha(const ScalarField& f, const HyperbolicPoint& x, double alpha,
                           const QuadratureSpec& spec);

/// Zonal origin fast path: zeta sigma_{n-1} int_1^inf f0(s) (s-1)^{alpha/2-1} ds.
Estimate potential_q_alpha_zonal_origin(const RadialProfile& f0, int n, double alpha,
                                        const QuadratureSpec& spec);

/// Logarithmic member of the family:
///   (Q^n f)(x) = zeta'_n int f(y) log([x,y]-1) ([x,y]+1)^{1-n/2} dy.
Estimate potential_q_n_log(const ScalarField& f, const HyperbolicPoint& x,
                           const QuadratureSpec& spec);
Estimate potential_q_n_log_zonal_origin(const RadialProfile& f0, int n,
                                        const QuadratureSpec& spec);

/// (B f)(x) = zeta'_n int f(y) ([x,y]+1)^{1-n/2} dy  (smooth kernel).
Estimate operator_b(const ScalarField& f, const HyperbolicPoint& x, const QuadratureSpec& spec);

/// Radial part of the invariant Laplacian on zonal profiles F(x_{n+1}):
///   (s^2-1) F''(s) + n s F'(s).
double beltrami_radial(const Profile1D& F, double s, int n);

/// D_alpha F = -Delta_H F - alpha(2n-2-alpha)/4 F on zonal profiles.
double d_alpha_radial(const Profile1D& F, double s, int n, double alpha);

/// sign * leading * prod_i (Delta_H + shifts[i]).
struct LaplacePolynomial {
    int n = 0;
    std::vector<double> shifts;
    double sign = 1.0;
    double leading = 1.0;
};

/// (-1)^ell prod_{i=1}^{ell} (Delta_H + i(n-1-i)).
LaplacePolynomial laplace_poly_general(int n, int ell);

/// prod_{i=1}^{d/2} (Delta_H + i(n-1-i)) scaled by the even-d inversion
/// constant (-1)^{d/2} Gamma((n-d)/2) / (2^d pi^{d/2} Gamma(n/2)).
LaplacePolynomial laplace_poly_even_mean(int n, int d);

/// Applies the polynomial radially on a uniform geodesic-radius grid with
/// even extension across r = 0; each factor costs two grid nodes at the
/// outer end.  Returns the transformed profile in the s variable.
Profile1D apply_laplace_polynomial_grid(const LaplacePolynomial& P,
                                        const std::function<double(double)>& value_at_r,
                                        double r_max, double h);
Profile1D apply_laplace_polynomial(const LaplacePolynomial& P, const Profile1D& F,
                                   double h = 0.02);

enum class ExtrapolationRule { Richardson, Linear, None };

struct MvOptions {
    double delta0 = 0.2;   // first extrapolation node s_0 = 1 + delta0
    int levels = 6;        // nodes s_j = 1 + delta0 2^{-j}, j = 0..levels
    double target_tol = 1e-2;
    int t_nodes = 0;       // mean-value profile resolution (0 = auto)
};

struct InversionDiagnostics {
    std::vector<double> node_values;
    std::vector<double> extrapolants;
    double quadrature = 0.0;
    double differentiation = 0.0;
    double extrapolation = 0.0;
};

/// Mean-value reconstruction of f(x) from phi = f-hat: builds
/// psi_x(r) = c^{-1} e^{td/2} (mean value at t = arccosh r), applies the
/// inverse fractional operator, and extrapolates s -> 1 on geometric nodes.
/// Throws ReconstructionUnstable when the extrapolants disagree by more than
/// 10x the target tolerance.
double invert_mean_value(const HorosphericalImage& phi, const HyperbolicPoint& x, int d,
                         ExtrapolationRule rule, const QuadratureSpec& spec,
                         const MvOptions& opt = {}, InversionDiagnostics* diag = nullptr);

struct ReconstructionReport {
    std::vector<double> probe_r;
    std::vector<double> reconstructed;
    std::vector<double> reference;
    std::vector<double> abs_error;
    double sup_error = 0.0;
    InversionDiagnostics budget;
};

HyperbolicPoint radial_probe(int n, double r);

/// Even-d local inversion  f = c P(Delta_H) (backprojection of phi)
/// evaluated on a radial grid; reference_profile_s supplies the comparison
/// values as a function of s (pass {} to skip).
ReconstructionReport invert_poly_even_d(const HorosphericalImage& phi,
                                        const std::vector<double>& probes_r,
                                        const std::function<double(double)>& reference_profile_s,
                                        const QuadratureSpec& spec, double grid_h = 0.02);

/// General polynomial inversion:
///   n odd:       f = P_ell(Delta_H) H*^{2ell-d} phi   (ell >= d/2);
///   n = 2:       f = -Delta_H H*^1_log phi + (1/4pi) int phi(a_t xi_0) dt;
///   n even >= 4: f = P_{n/2}(Delta_H) H*^{n-d}_log phi.
ReconstructionReport invert_poly_general(const HorosphericalImage& phi, int ell,
                                         const std::vector<double>& probes_r,
                                         const std::function<double(double)>& reference_profile_s,
                                         const QuadratureSpec& spec, double grid_h = 0.02);

/// sup over radial probes of |D_alpha Q^alpha f - Q^{alpha-2} f|
/// (Q^0 f = f).
double d_alpha_recursion_residual(const ScalarField& f, double alpha,
                                  const std::vector<double>& probes_r,
                                  const QuadratureSpec& spec, double grid_h = 0.02);

}  // namespace horo
