#include "horo/quadrature.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace horo {

namespace {

std::map<int, std::pair<std::vector<double>, std::vector<double>>> gl_cache;
std::mutex gl_cache_mutex;

// Newton iteration on the Legendre recurrence.
std::pair<std::vector<double>, std::vector<double>> compute_gl(int n) {
    std::vector<double> x(n), w(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
    return {x, w};
}

double tol_of(const QuadratureSpec& spec, double scale) {
    return std::max(spec.abs_tolerance, spec.rel_tolerance * std::abs(scale));
}

double simpson_rule(double fa, double fm, double fb, double h6) { return h6 * (fa + 4.0 * fm + fb); }

void adaptive_simpson_rec(const Fn1D& f, double a, double b, double fa, double fm, double fb,
                          double whole, double tol, int depth, Estimate& out) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    out.evaluations += 2;
    const double left = simpson_rule(fa, flm, fm, (m - a) / 6.0);
    const double right = simpson_rule(fm, frm, fb, (b - m) / 6.0);
    const double diff = left + right - whole;
    if (std::abs(diff) <= 15.0 * tol || depth <= 0) {
        out.value += left + right + diff / 15.0;
        out.abs_error += std::abs(diff) / 15.0;
        if (depth <= 0 && std::abs(diff) > 15.0 * tol) out.converged = false;
        return;
    }
    adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, out);
    adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, out);
}

}  // namespace

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order) {
    std::lock_guard<std::mutex> lock(gl_cache_mutex);
    auto it = gl_cache.find(order);
    if (it == gl_cache.end()) it = gl_cache.emplace(order, compute_gl(order)).first;
    return it->second;
}

double integrate_gl_fixed(const Fn1D& f, double a, double b, int order) {
    const auto& [x, w] = gauss_legendre(order);
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double sum = 0.0;
    for (size_t i = 0; i < x.size(); ++i) sum += w[i] * f(c + h * x[i]);
    return h * sum;
}

Estimate integrate_gl_composite(const Fn1D& f, double a, double b, const QuadratureSpec& spec) {
    constexpr int kOrder = 16;
    Estimate out;
    if (a == b) return out;
    double prev = 0.0, prev_err = 0.0;
    bool have_prev = false, have_err = false;
    for (int panels = 1;; panels *= 2) {
        double sum = 0.0;
        const double h = (b - a) / panels;
        for (int p = 0; p < panels; ++p)
            sum += integrate_gl_fixed(f, a + p * h, a + (p + 1) * h, kOrder);
        out.evaluations += static_cast<long>(panels) * kOrder;
        if (have_prev) {
            out.abs_error = std::abs(sum - prev);
            if (out.abs_error <= tol_of(spec, sum)) {
                out.value = sum;
                return out;
            }
            // stop at the noise floor of the integrand: refinement no longer
            // reduces the difference
            if (have_err && panels >= 64 && out.abs_error > 0.5 * prev_err) {
                out.value = sum;
                out.converged = out.abs_error <= 1e3 * tol_of(spec, sum);
                return out;
            }
            prev_err = out.abs_error;
            have_err = true;
        }
        prev = sum;
        have_prev = true;
        if (out.evaluations * 2L > spec.max_evals) {
            out.value = sum;
            out.converged = false;
            return out;
        }
    }
}

Estimate integrate_adaptive_simpson(const Fn1D& f, double a, double b, const QuadratureSpec& spec) {
    Estimate out;
    if (a == b) return out;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    out.evaluations = 3;
    const double whole = simpson_rule(fa, fm, fb, (b - a) / 6.0);
    // Depth bound keeps the recursion within the evaluation budget.
    int depth = 1;
    while ((2L << depth) < spec.max_evals && depth < 48) ++depth;
    adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol_of(spec, whole), depth, out);
    return out;
}

Estimate integrate_tanh_sinh(const Fn1D& f, double a, double b, const QuadratureSpec& spec) {
    Estimate out;
    if (a == b) return out;
    boost::math::quadrature::tanh_sinh<double> integrator(15);
    double err = 0.0, l1 = 0.0;
    long evals = 0;
    auto counted = [&](double x) {
        ++evals;
        return f(x);
    };
    out.value = integrator.integrate(counted, a, b, std::sqrt(spec.rel_tolerance), &err, &l1);
    out.abs_error = err * std::max(1.0, l1);
    out.evaluations = evals;
    out.converged = out.abs_error <= std::max(tol_of(spec, out.value), 1e3 * spec.abs_tolerance)
                    || out.abs_error <= 1e-12 * std::max(1.0, l1);
    return out;
}

Estimate integrate(const Fn1D& f, double a, double b, const QuadratureSpec& spec) {
    switch (spec.scheme) {
        case QuadScheme::AdaptiveSimpson: return integrate_adaptive_simpson(f, a, b, spec);
        case QuadScheme::TanhSinh: return integrate_tanh_sinh(f, a, b, spec);
        case QuadScheme::GaussLegendreComposite:
        default: return integrate_gl_composite(f, a, b, spec);
    }
}

Estimate integrate_box(const std::function<double(const double*)>& F, int dim, double halfwidth,
                       const QuadratureSpec& spec) {
    Estimate out;
    if (dim < 1) throw std::invalid_argument("integrate_box: dim must be >= 1");
    double prev = 0.0;
    bool have_prev = false;
    for (int order = 16;; order *= 2) {
        const auto& [x, w] = gauss_legendre(order);
        std::vector<double> pt(dim);
        // odometer over the tensor grid
        std::vector<int> idx(dim, 0);
        double sum = 0.0;
        for (;;) {
            double wt = 1.0;
            for (int k = 0; k < dim; ++k) {
                pt[k] = halfwidth * x[idx[k]];
                wt *= w[idx[k]] * halfwidth;
            }
            sum += wt * F(pt.data());
            int k = 0;
            while (k < dim && ++idx[k] == order) idx[k++] = 0;
            if (k == dim) break;
        }
        long evals = 1;
        for (int k = 0; k < dim; ++k) evals *= order;
        out.evaluations += evals;
        if (have_prev) {
            out.abs_error = std::abs(sum - prev);
            if (out.abs_error <= tol_of(spec, sum)) {
                out.value = sum;
                return out;
            }
        }
        prev = sum;
        have_prev = true;
        long next = 1;
        for (int k = 0; k < dim; ++k) next *= 2L * order;
        if (out.evaluations + next > spec.max_evals) {
            out.value = sum;
            out.converged = false;
            return out;
        }
    }
}

double nth_derivative(const Fn1D& f, double x, int m, double h) {
    switch (m) {
        case 1:
            return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
        case 2:
            return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) /
                   (12 * h * h);
        case 3:
            return (f(x - 3 * h) - 8 * f(x - 2 * h) + 13 * f(x - h) - 13 * f(x + h) +
                    8 * f(x + 2 * h) - f(x + 3 * h)) /
                   (8 * h * h * h);
        case 4:
            return (-f(x - 3 * h) + 12 * f(x - 2 * h) - 39 * f(x - h) + 56 * f(x) - 39 * f(x + h) +
                    12 * f(x + 2 * h) - f(x + 3 * h)) /
                   (6 * h * h * h * h);
        default:
            throw std::invalid_argument("nth_derivative: m must be in 1..4");
    }
}

RichardsonResult richardson_extrapolate(const std::vector<double>& values) {
    RichardsonResult res;
    const size_t J = values.size();
    if (J == 0) throw std::invalid_argument("richardson_extrapolate: empty input");
    std::vector<std::vector<double>> T(J);
    for (size_t j = 0; j < J; ++j) {
        T[j].resize(j + 1);
        T[j][0] = values[j];
        for (size_t k = 1; k <= j; ++k) {
            const double pk = std::pow(2.0, static_cast<double>(k));
            T[j][k] = (pk * T[j][k - 1] - T[j - 1][k - 1]) / (pk - 1.0);
        }
        res.diagonal.push_back(T[j][j]);
    }
    res.limit = res.diagonal.back();
    res.last_diff = J >= 2 ? std::abs(res.diagonal[J - 1] - res.diagonal[J - 2]) : 0.0;
    return res;
}

}  // namespace horo
