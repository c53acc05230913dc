#pragma once

#include <vector>

namespace horo {

/// Natural cubic spline over strictly increasing knots.  Queries outside the
/// knot range evaluate the boundary cubic.
class CubicSpline {
  public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> xs, std::vector<double> ys);

    double operator()(double x) const;
    double derivative(double x) const;
    double second_derivative(double x) const;

    double x_min() const { return xs_.front(); }
    double x_max() const { return xs_.back(); }
    bool empty() const { return xs_.empty(); }

  private:
    size_t interval(double x) const;

    std::vector<double> xs_, ys_, m_;  // m_: second derivatives at knots
};

}  // namespace horo
