#include "horo/field.hpp"

#include <cmath>

#include "horo/quadrature.hpp"

namespace horo {

namespace {

double smooth_bump(double u) {
    const double u2 = u * u;
    if (u2 >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - u2));
}

}  // namespace

ScalarField zonal_field(int n, std::shared_ptr<const RadialProfile> f0) {
    ScalarField f;
    f.n = n;
    f.zonal = f0;
    f.tail = f0->tail();
    if (f.tail.kind == TailBound::Kind::Compact)
        f.support_radius = std::acosh(f.tail.s_max);
    if (f.tail.kind == TailBound::Kind::Power)
        f.decay_mu = f.tail.rate;
    else
        f.decay_mu = std::numeric_limits<double>::infinity();
    f.eval = [f0](const HyperbolicPoint& x) { return (*f0)(x.last()); };
    return f;
}

ScalarField shifted_zonal_field(std::shared_ptr<const RadialProfile> f0,
                                const LorentzElement& gamma) {
    ScalarField f = zonal_field(gamma.n(), f0);
    f.shift = gamma;
    const LorentzElement inv = gamma.inverse();
    f.eval = [f0, inv](const HyperbolicPoint& x) { return (*f0)(inv.apply(x).last()); };
    if (std::isfinite(f.support_radius)) {
        const double center_dist =
            geodesic_distance(gamma.apply(origin(gamma.n())), origin(gamma.n()));
        f.support_radius += center_dist;
    }
    return f;
}

ScalarField field_compose(const ScalarField& f, const LorentzElement& gamma) {
    ScalarField g = f;
    auto base = f.eval;
    g.eval = [base, gamma](const HyperbolicPoint& x) { return base(gamma.apply(x)); };
    if (std::isfinite(f.support_radius)) {
        const double move = geodesic_distance(gamma.apply(origin(gamma.n())), origin(gamma.n()));
        g.support_radius = f.support_radius + move;
    }
    if (f.zonal) {
        // f o gamma has the same profile moved by gamma^{-1} * old shift
        const LorentzElement prior = f.shift ? *f.shift : LorentzElement::identity(f.n);
        g.shift = gamma.inverse() * prior;
    }
    return g;
}

ScalarField zero_field(int n) {
    ScalarField f;
    f.n = n;
    f.support_radius = 0.0;
    f.decay_mu = std::numeric_limits<double>::infinity();
    f.tail = TailBound::compact(1.0);
    f.zonal = std::make_shared<RadialProfile>(
        RadialProfile::analytic([](double) { return 0.0; }, TailBound::compact(1.0)));
    f.eval = [](const HyperbolicPoint&) { return 0.0; };
    return f;
}

ScalarField constant_field(int n, double value) {
    ScalarField f;
    f.n = n;
    f.tail = TailBound{};
    f.zonal = std::make_shared<RadialProfile>(
        RadialProfile::analytic([value](double) { return value; }, TailBound{}));
    f.eval = [value](const HyperbolicPoint&) { return value; };
    return f;
}

std::shared_ptr<RadialProfile> zonal_exp_profile(double lambda) {
    if (lambda <= 0.0) throw std::invalid_argument("zonal_exp_profile: lambda must be positive");
    return std::make_shared<RadialProfile>(RadialProfile::analytic(
        [lambda](double s) { return std::exp(-lambda * (s - 1.0)); },
        TailBound::exponential(lambda, 1.0)));
}

std::shared_ptr<RadialProfile> ball_bump_profile(double h, double amplitude) {
    if (h <= 0.0) throw std::invalid_argument("ball_bump_profile: h must be positive");
    return std::make_shared<RadialProfile>(RadialProfile::analytic(
        [h, amplitude](double s) { return amplitude * smooth_bump((s - 1.0) / h); },
        TailBound::compact(1.0 + h)));
}

std::shared_ptr<RadialProfile> sharpness_profile(double p, int n) {
    if (p < 1.0) throw std::invalid_argument("sharpness_profile: p must be >= 1");
    auto f0 = [p, n](double s) {
        if (s <= 1.0) return 0.0;
        return std::pow(s * s - 1.0, (1.0 - 0.5 * n) / p) /
               (std::pow(s + 1.0, 1.0 / p) * std::log(s + 1.0));
    };
    // f0(s) ~ s^{(1-n)/p} / log s for large s
    return std::make_shared<RadialProfile>(
        RadialProfile::analytic(f0, TailBound::power((n - 1.0) / p, 1.0)));
}

std::shared_ptr<RadialProfile> zero_mean_bump_profile(int n, double h1, double h2) {
    auto b1 = ball_bump_profile(h1);
    auto b2 = ball_bump_profile(h2);
    QuadratureSpec tight;
    tight.rel_tolerance = 1e-12;
    tight.abs_tolerance = 1e-14;
    const double m1 = radial_measure_integral(*b1, n, tight).value;
    const double m2 = radial_measure_integral(*b2, n, tight).value;
    const double c = m1 / m2;
    auto f0 = [b1, b2, c](double s) { return (*b1)(s)-c * (*b2)(s); };
    return std::make_shared<RadialProfile>(
        RadialProfile::analytic(f0, TailBound::compact(1.0 + std::max(h1, h2))));
}

}  // namespace horo
