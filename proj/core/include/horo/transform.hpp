#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "horo/field.hpp"
#include "horo/fractional.hpp"
#include "horo/horosphere.hpp"
#include "horo/spline.hpp"

namespace horo {

/// Integral of f over the horosphere xi with respect to its flat measure:
///   int_{R^d} f(k a_t n_u n_w x0) dw,
/// tensor quadrature over a box whose half-width comes from
/// spec.truncation_radius or the field's decay.  Throws DivergenceError when
/// the decay metadata cannot guarantee convergence (decay_mu <= d/2 without
/// compact support).
Estimate forward_general(const ScalarField& f, const Horosphere& xi, const QuadratureSpec& spec);

/// Zonal fast path:  c e^{-t d/2} (I_-^{d/2} f0)(eta),
/// eta = cosh t + u^2 e^t / 2,  c = 2^{d/2-1} sigma_{d-1} Gamma(d/2).
Estimate forward_zonal(const Profile1D& f0, double t, double u_norm, int d,
                       const QuadratureSpec& spec);

/// Normalized average of f over the geodesic sphere [x,y] = s.  Uses the
/// single-angle reduction for (shifted) zonal fields, a full product sphere
/// rule otherwise.
Estimate spherical_mean(const ScalarField& f, const HyperbolicPoint& x, double s,
                        const QuadratureSpec& spec);

/// Brute-force product-rule evaluation ignoring any zonal backing.
Estimate spherical_mean_raw(const ScalarField& f, const HyperbolicPoint& x, double s,
                            const QuadratureSpec& spec);

/// s -> (M_x f)(s) sampled on a geodesic-radius grid and splined; the grid
/// reaches to where f's decay makes the mean negligible.
Profile1D spherical_mean_profile(const ScalarField& f, const HyperbolicPoint& x,
                                 const QuadratureSpec& spec, int r_nodes = 0);

struct ImageCache;

/// A function on the manifold of d-horospheres.  Provenance determines both
/// evaluation and how K-averages against it are reduced:
///  - ExactZonal: closed zonal form of the transform of `zonal`, optionally
///    transported by `shift` (equivariance).
///  - Quadrature: forward_general of `field`, memoized.
///  - User: arbitrary callable.
struct HorosphericalImage {
    enum class Provenance { ExactZonal, Quadrature, User };

    Provenance provenance = Provenance::User;
    int n = 0;
    int d = 0;
    std::shared_ptr<const RadialProfile> zonal;
    std::optional<LorentzElement> shift;
    std::shared_ptr<const ScalarField> field;
    std::function<double(const Horosphere&)> user_fn;
    QuadratureSpec quad{};
    std::shared_ptr<ImageCache> cache;

    double operator()(const Horosphere& xi) const;
};

HorosphericalImage image_from_zonal(std::shared_ptr<const RadialProfile> f0, int n, int d,
                                    const QuadratureSpec& quad);
HorosphericalImage image_from_zonal_shifted(std::shared_ptr<const RadialProfile> f0,
                                            const LorentzElement& gamma, int d,
                                            const QuadratureSpec& quad);
HorosphericalImage image_from_field(std::shared_ptr<const ScalarField> f, int d,
                                    const QuadratureSpec& quad);
HorosphericalImage image_from_function(std::function<double(const Horosphere&)> fn, int n, int d);

/// Transform image of a field, choosing the zonal closed form when the field
/// carries a profile and the quadrature route otherwise.
HorosphericalImage image_of(const ScalarField& f, int d, const QuadratureSpec& quad);

/// Mean value operator: average of phi over the horospheres r_x k a_t xi_0,
/// k Haar on the rotation subgroup.  The average reduces to a sphere
/// quadrature whenever phi comes from a (possibly shifted) zonal field or
/// d = n-1; only general images of non-zonal fields with d < n-1 require the
/// full rotation-group rule.
Estimate mean_value(const HorosphericalImage& phi, const HyperbolicPoint& x, double t,
                    const QuadratureSpec& spec);

/// Average over all d-horospheres through x (mean value at t = 0).
Estimate check_operator(const HorosphericalImage& phi, const HyperbolicPoint& x,
                        const QuadratureSpec& spec);

/// t -> mean_value(phi, x, t) sampled uniformly on [-T, T] and splined;
/// T covers the support/decay of the underlying field seen from x.
class MeanValueProfile {
  public:
    MeanValueProfile(const HorosphericalImage& phi, const HyperbolicPoint& x,
                     const QuadratureSpec& spec, int nodes = 0);

    double operator()(double t) const;
    double support_T() const { return T_; }
    double max_error() const { return max_err_; }

  private:
    CubicSpline spline_;
    double T_ = 0.0;
    double max_err_ = 0.0;
};

/// Weighted dual operator
///   (H*^alpha phi)(x) = c_alpha int_{K x R} phi(r_x k a_t xi_0) h_alpha(t) dk dt,
///   h_alpha(t) = e^{td/2} (cosh t - 1)^{alpha/2-1} |sinh t|.
/// The t-singularity is removed by the substitution tau = cosh t - 1.
Estimate hstar_alpha(const HorosphericalImage& phi, const HyperbolicPoint& x, double alpha,
                     const QuadratureSpec& spec);

/// The alpha = n-d member of the family, with the logarithmic kernel
///   e^{td/2} |sinh t| (cosh t - 1)^{(n-d)/2-1} log(cosh t - 1).
Estimate hstar_log(const HorosphericalImage& phi, const HyperbolicPoint& x,
                   const QuadratureSpec& spec);

/// |LHS - RHS| of the measure identity
///   int dt int du f-hat(k a_t n_u xi_0) = int f dx   (d < n-1),
///   int dt f-hat(k a_t xi_0)            = int f dx   (d = n-1).
double fubini_identity_residual(const ScalarField& f, int d, const Mat& k,
                                const QuadratureSpec& spec);

/// |LHS - RHS| of the weighted zonal identity with weight
///   e^{td/2} (cosh t - 1)^{alpha/2-1} |sinh t|.
double weighted_zonal_identity_residual(const ScalarField& f, int d, double alpha,
                                        const QuadratureSpec& spec);

struct SharpnessProbe {
    double lp_norm = 0.0;
    double transform_truncated = 0.0;
};

/// Truncated L^p norm (over x_{n+1} <= cutoff) of the borderline profile and
/// the truncated zonal transform integral at eta = 2.
SharpnessProbe sharpness_probe(double p, int n, int d, double cutoff, const QuadratureSpec& spec);
SharpnessProbe sharpness_probe_with_profile(const RadialProfile& f0, double p, int n, int d,
                                            double cutoff, const QuadratureSpec& spec);

}  // namespace horo
