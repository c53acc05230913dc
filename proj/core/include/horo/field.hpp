#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>

#include "horo/geometry.hpp"
#include "horo/profile.hpp"

namespace horo {

/// A zonal profile f0(s), s = x_{n+1} >= 1, together with decay metadata.
using RadialProfile = Profile1D;

/// Pointwise function on the hyperboloid.  Zonal fields (possibly moved by a
/// group element) carry their profile so that the angular structure can be
/// exploited; general fields are evaluated through `eval` only.
struct ScalarField {
    int n = 0;
    std::function<double(const HyperbolicPoint&)> eval;
    /// Geodesic radius around the origin outside which f vanishes.
    double support_radius = std::numeric_limits<double>::infinity();
    /// f(x) = O(x_{n+1}^{-mu}) when known.
    std::optional<double> decay_mu;
    /// Tail of the (possibly shifted) zonal profile in the s variable.
    TailBound tail{};

    std::shared_ptr<const RadialProfile> zonal;  // set for zonal fields
    std::optional<LorentzElement> shift;         // zonal profile moved by shift

    double operator()(const HyperbolicPoint& x) const { return eval(x); }
    bool is_zonal() const { return zonal != nullptr && !shift.has_value(); }
};

/// f(x) = f0(x_{n+1}).
ScalarField zonal_field(int n, std::shared_ptr<const RadialProfile> f0);

/// f(x) = f0((gamma^{-1} x)_{n+1}); the profile transported by gamma.
ScalarField shifted_zonal_field(std::shared_ptr<const RadialProfile> f0,
                                const LorentzElement& gamma);

/// f composed with gamma: x -> f(gamma x).  Preserves zonal backing.
ScalarField field_compose(const ScalarField& f, const LorentzElement& gamma);

ScalarField zero_field(int n);
ScalarField constant_field(int n, double value);

/// exp(-lambda (s-1))
std::shared_ptr<RadialProfile> zonal_exp_profile(double lambda);

/// Smooth bump supported on the geodesic ball of radius arccosh(1 + h):
/// f0(s) = exp(1 - 1/(1 - u^2)), u = (s-1)/h, zero for u >= 1.
std::shared_ptr<RadialProfile> ball_bump_profile(double h, double amplitude = 1.0);

/// Borderline-integrability probe profile
///   f0(s) = (s^2-1)^{(1-n/2)/p} / ((s+1)^{1/p} log(s+1)).
std::shared_ptr<RadialProfile> sharpness_profile(double p, int n);

/// A zero-mean compactly supported zonal profile (difference of two bumps
/// balanced against the volume measure of H^n with the given n).
std::shared_ptr<RadialProfile> zero_mean_bump_profile(int n, double h1, double h2);

}  // namespace horo
