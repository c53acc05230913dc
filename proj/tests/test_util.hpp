#pragma once

#include <random>

#include <Eigen/Dense>

#include "horo/geometry.hpp"

namespace horo_test {

using horo::Mat;
using horo::Vec;

inline Vec random_vec(int size, std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> gauss(0.0, scale);
    Vec v(size);
    for (int i = 0; i < size; ++i) v[i] = gauss(rng);
    return v;
}

inline Vec random_unit(int size, std::mt19937_64& rng) {
    Vec v = random_vec(size, rng);
    while (v.norm() < 1e-8) v = random_vec(size, rng);
    return v / v.norm();
}

/// Haar-ish random rotation from the QR of a Gaussian matrix.
inline Mat random_rotation(int n, std::mt19937_64& rng) {
    Mat a(n, n);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = gauss(rng);
    Eigen::HouseholderQR<Mat> qr(a);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i)
        if (r(i, i) < 0.0) q.col(i) *= -1.0;
    if (q.determinant() < 0.0) q.col(0) *= -1.0;
    return q;
}

inline horo::LorentzElement random_lorentz(int n, std::mt19937_64& rng, double v_scale = 1.0,
                                           double t_scale = 1.0) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const Vec v = random_vec(n - 1, rng, v_scale);
    const double t = t_scale * gauss(rng);
    return horo::make_n(v) * horo::make_a(t, n) * horo::make_k(random_rotation(n, rng));
}

inline horo::HyperbolicPoint random_point(int n, std::mt19937_64& rng, double r_scale = 1.0) {
    std::uniform_real_distribution<double> uni(0.0, r_scale);
    return horo::hyperbolic_coords(random_unit(n, rng), uni(rng));
}

}  // namespace horo_test
