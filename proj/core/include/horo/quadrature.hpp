#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "horo/config.hpp"

namespace horo {

using Fn1D = std::function<double(double)>;

/// Gauss-Legendre nodes and weights on [-1, 1], cached per order.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order);

/// Fixed-order Gauss-Legendre on [a, b] (no error estimate).
double integrate_gl_fixed(const Fn1D& f, double a, double b, int order);

/// Composite Gauss-Legendre with panel doubling until the tolerance of
/// `spec` is met or the evaluation budget runs out.
Estimate integrate_gl_composite(const Fn1D& f, double a, double b, const QuadratureSpec& spec);

/// Classic adaptive Simpson.
Estimate integrate_adaptive_simpson(const Fn1D& f, double a, double b, const QuadratureSpec& spec);

/// tanh-sinh quadrature; tolerant of integrable endpoint singularities
/// (algebraic or logarithmic).
Estimate integrate_tanh_sinh(const Fn1D& f, double a, double b, const QuadratureSpec& spec);

/// Dispatch on spec.scheme.
Estimate integrate(const Fn1D& f, double a, double b, const QuadratureSpec& spec);

/// Tensor-product integration of F over the box [-R, R]^dim, with
/// resolution doubling until converged.  F receives a pointer to dim doubles.
Estimate integrate_box(const std::function<double(const double*)>& F, int dim, double halfwidth,
                       const QuadratureSpec& spec);

/// m-th derivative by 4th-order central differences with step h.
/// Supported m = 1..4.
double nth_derivative(const Fn1D& f, double x, int m, double h);

struct RichardsonResult {
    double limit = 0.0;
    /// |last diagonal entry - previous diagonal entry|; stagnation estimate.
    double last_diff = 0.0;
    std::vector<double> diagonal;
};

/// Extrapolates D(eps) -> eps = 0 from samples at eps_j = eps0 * 2^{-j},
/// assuming an error expansion in integer powers of eps.
/// `values[j]` corresponds to eps_j.
RichardsonResult richardson_extrapolate(const std::vector<double>& values);

}  // namespace horo
