#include "horo/spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace horo {

CubicSpline::CubicSpline(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    const size_t n = xs_.size();
    if (n != ys_.size() || n < 2)
        throw std::invalid_argument("CubicSpline: need >= 2 matching knots");
    for (size_t i = 1; i < n; ++i)
        if (!(xs_[i] > xs_[i - 1]))
            throw std::invalid_argument("CubicSpline: knots must be strictly increasing");

    m_.assign(n, 0.0);
    if (n == 2) return;  // linear

    // Tridiagonal solve for interior second derivatives (natural BC).
    std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
    for (size_t i = 1; i + 1 < n; ++i) {
        const double h0 = xs_[i] - xs_[i - 1];
        const double h1 = xs_[i + 1] - xs_[i];
        diag[i] = (h0 + h1) / 3.0;
        upper[i] = h1 / 6.0;
        rhs[i] = (ys_[i + 1] - ys_[i]) / h1 - (ys_[i] - ys_[i - 1]) / h0;
    }
    // forward sweep
    for (size_t i = 2; i + 1 < n; ++i) {
        const double h0 = xs_[i] - xs_[i - 1];
        const double lower = h0 / 6.0;
        const double w = lower / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    // back substitution
    for (size_t i = n - 2; i >= 1; --i) {
        m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];
        if (i == 1) break;
    }
}

size_t CubicSpline::interval(double x) const {
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    size_t i = static_cast<size_t>(it - xs_.begin());
    if (i == 0) i = 1;
    if (i >= xs_.size()) i = xs_.size() - 1;
    return i - 1;
}

double CubicSpline::operator()(double x) const {
    const size_t i = interval(x);
    const double h = xs_[i + 1] - xs_[i];
    const double a = (xs_[i + 1] - x) / h, b = (x - xs_[i]) / h;
    return a * ys_[i] + b * ys_[i + 1] +
           ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
}

double CubicSpline::derivative(double x) const {
    const size_t i = interval(x);
    const double h = xs_[i + 1] - xs_[i];
    const double a = (xs_[i + 1] - x) / h, b = (x - xs_[i]) / h;
    return (ys_[i + 1] - ys_[i]) / h +
           ((3.0 * b * b - 1.0) * m_[i + 1] - (3.0 * a * a - 1.0) * m_[i]) * h / 6.0;
}

double CubicSpline::second_derivative(double x) const {
    const size_t i = interval(x);
    const double h = xs_[i + 1] - xs_[i];
    const double a = (xs_[i + 1] - x) / h, b = (x - xs_[i]) / h;
    return a * m_[i] + b * m_[i + 1];
}

}  // namespace horo
