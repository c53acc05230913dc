#include "horo/profile.hpp"

#include <algorithm>
#include <cmath>

#include "horo/quadrature.hpp"

namespace horo {

double TailBound::truncation_point(double eps, double growth_pow) const {
    switch (kind) {
        case Kind::Compact:
            return s_max;
        case Kind::Exponential: {
            if (rate <= 0.0) throw DivergenceError("TailBound: nonpositive exponential rate");
            // Solve amplitude * S^p * exp(-rate(S-1))/rate = eps by iteration.
            double S = 2.0;
            for (int it = 0; it < 4; ++it) {
                const double poly = std::pow(std::max(S, 1.0), growth_pow);
                const double target = std::max(amplitude * poly / (rate * eps), 1.5);
                S = 1.0 + std::log(target) / rate;
            }
            return S;
        }
        case Kind::Power: {
            const double excess = rate - growth_pow - 1.0;
            if (excess <= 0.0)
                throw DivergenceError("TailBound: power tail does not dominate the weight");
            return std::pow(amplitude / (excess * eps), 1.0 / excess);
        }
        case Kind::None:
        default:
            throw DivergenceError("TailBound: no decay information for a semi-infinite integral");
    }
}

Profile1D Profile1D::analytic(std::function<double(double)> f, TailBound tail, double domain_lo) {
    Profile1D p;
    p.fn_ = std::move(f);
    p.tail_ = std::move(tail);
    p.domain_lo_ = domain_lo;
    return p;
}

Profile1D Profile1D::sampled(std::vector<double> xs, std::vector<double> ys, TailBound tail) {
    Profile1D p;
    p.domain_lo_ = xs.front();
    p.spline_ = std::make_shared<CubicSpline>(std::move(xs), std::move(ys));
    p.tail_ = std::move(tail);
    return p;
}

double Profile1D::operator()(double s) const {
    if (fn_) return fn_(s);
    if (!spline_) return 0.0;
    if (s < spline_->x_min() || s > spline_->x_max()) return 0.0;
    return (*spline_)(s);
}

double Profile1D::domain_hi() const {
    if (spline_) return spline_->x_max();
    if (tail_.kind == TailBound::Kind::Compact) return tail_.s_max;
    return std::numeric_limits<double>::infinity();
}

double Profile1D::derivative(double s, int m, double h_override) const {
    const int reach = m <= 2 ? 2 : 3;
    double h = h_override;
    if (h <= 0.0) {
        h = std::max(1e-5, (m == 1 ? 1e-4 : 2e-3) * std::max(1.0, std::abs(s)));
        if (spline_) {
            // keep the stencil wider than the local knot spacing to avoid
            // amplifying sampling noise
            const double span = (spline_->x_max() - spline_->x_min());
            h = std::max(h, 1e-3 * span / 4.0);
        }
    }
    // shrink so the stencil stays inside the domain
    if (s - reach * h < domain_lo_) h = (s - domain_lo_) / (reach + 0.25);
    if (h <= 0.0)
        throw std::invalid_argument("Profile1D::derivative: point too close to the domain edge");
    auto f = [this](double x) { return (*this)(x); };
    return nth_derivative(f, s, m, h);
}

}  // namespace horo
