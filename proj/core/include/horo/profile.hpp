#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "horo/config.hpp"
#include "horo/spline.hpp"

namespace horo {

/// How a single-variable profile behaves for large argument; used to choose
/// truncation points for integrals over [r, infinity).
struct TailBound {
    enum class Kind { None, Compact, Exponential, Power };

    Kind kind = Kind::None;
    /// Compact: support is [lo, s_max].  Exponential: |f(s)| <= amplitude *
    /// exp(-rate*(s-1)).  Power: |f(s)| <= amplitude * s^{-rate}.
    double s_max = std::numeric_limits<double>::infinity();
    double rate = 0.0;
    double amplitude = 1.0;

    static TailBound compact(double s_max_) {
        return {Kind::Compact, s_max_, 0.0, 1.0};
    }
    static TailBound exponential(double rate_, double amplitude_ = 1.0) {
        return {Kind::Exponential, std::numeric_limits<double>::infinity(), rate_, amplitude_};
    }
    static TailBound power(double rate_, double amplitude_ = 1.0) {
        return {Kind::Power, std::numeric_limits<double>::infinity(), rate_, amplitude_};
    }

    /// Smallest S such that the tail integral of |f(s)| * s^growth_pow over
    /// [S, inf) is below eps.  Throws DivergenceError if no such S exists.
    double truncation_point(double eps, double growth_pow = 0.0) const;
};

/// A function of one variable on [domain_lo, infinity), either an analytic
/// callable or a sampled grid backed by a cubic spline.  Sampled profiles
/// evaluate to 0 beyond their grid.
class Profile1D {
  public:
    Profile1D() = default;

    static Profile1D analytic(std::function<double(double)> f, TailBound tail = {},
                              double domain_lo = 1.0);
    static Profile1D sampled(std::vector<double> xs, std::vector<double> ys, TailBound tail = {});

    double operator()(double s) const;

    /// m-th derivative (m = 1..4), 4th-order central differences with the
    /// step clamped so the stencil stays inside the domain.  `h_override > 0`
    /// fixes the step.
    double derivative(double s, int m = 1, double h_override = 0.0) const;

    bool is_analytic() const { return static_cast<bool>(fn_); }
    double domain_lo() const { return domain_lo_; }
    /// Upper end of the representable range (grid end or tail truncation).
    double domain_hi() const;
    const TailBound& tail() const { return tail_; }
    void set_tail(TailBound t) { tail_ = std::move(t); }

  private:
    std::function<double(double)> fn_;
    std::shared_ptr<CubicSpline> spline_;
    TailBound tail_{};
    double domain_lo_ = 1.0;
};

}  // namespace horo
