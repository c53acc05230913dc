#include "horo/sphere_rules.hpp"

#include <cmath>
#include <stdexcept>

#include "horo/quadrature.hpp"

namespace horo {

namespace {

void normalize(std::vector<double>& w) {
    double sum = 0.0;
    for (double x : w) sum += x;
    for (double& x : w) x /= sum;
}

}  // namespace

SphereRule sphere_rule(int n, int order) {
    if (n < 1) throw std::invalid_argument("sphere_rule: n must be >= 1");
    if (order < 2) order = 2;
    SphereRule rule;
    if (n == 1) {
        rule.nodes = {Vec::Constant(1, 1.0), Vec::Constant(1, -1.0)};
        rule.weights = {0.5, 0.5};
        return rule;
    }
    if (n == 2) {
        const int m = 4 * order;
        for (int j = 0; j < m; ++j) {
            const double phi = 2.0 * M_PI * (j + 0.5) / m;
            Vec v(2);
            v << std::cos(phi), std::sin(phi);
            rule.nodes.push_back(std::move(v));
            rule.weights.push_back(1.0 / m);
        }
        return rule;
    }
    // theta = (omega sin(th), cos(th)), measure sin^{n-2}(th) dth d(omega)
    const SphereRule sub = sphere_rule(n - 1, order);
    const auto& [gx, gw] = gauss_legendre(2 * order);
    if (n == 3) {
        // polar integral in c = cos(th) has constant weight
        for (size_t i = 0; i < gx.size(); ++i) {
            const double c = gx[i], s = std::sqrt(std::max(0.0, 1.0 - c * c));
            for (size_t j = 0; j < sub.nodes.size(); ++j) {
                Vec v(3);
                v.head(2) = s * sub.nodes[j];
                v[2] = c;
                rule.nodes.push_back(std::move(v));
                rule.weights.push_back(gw[i] * sub.weights[j]);
            }
        }
    } else {
        // integrate in th on [0, pi]; the sin^{n-2} factor stays analytic
        for (size_t i = 0; i < gx.size(); ++i) {
            const double th = 0.5 * M_PI * (gx[i] + 1.0);
            const double s = std::sin(th), c = std::cos(th);
            const double wth = gw[i] * std::pow(s, n - 2.0);
            for (size_t j = 0; j < sub.nodes.size(); ++j) {
                Vec v(n);
                v.head(n - 1) = s * sub.nodes[j];
                v[n - 1] = c;
                rule.nodes.push_back(std::move(v));
                rule.weights.push_back(wth * sub.weights[j]);
            }
        }
    }
    normalize(rule.weights);
    return rule;
}

SphereRule zonal_angle_rule(int n, int order) {
    if (n < 2) throw std::invalid_argument("zonal_angle_rule: n must be >= 2");
    if (order < 2) order = 2;
    SphereRule rule;
    auto push = [&](double c, double w) {
        rule.nodes.push_back(Vec::Constant(1, c));
        rule.weights.push_back(w);
    };
    if (n == 2) {
        const int m = 4 * order;
        for (int j = 0; j < m; ++j) push(std::cos(2.0 * M_PI * (j + 0.5) / m), 1.0 / m);
        return rule;
    }
    const auto& [gx, gw] = gauss_legendre(2 * order);
    if (n == 3) {
        for (size_t i = 0; i < gx.size(); ++i) push(gx[i], gw[i]);
    } else {
        for (size_t i = 0; i < gx.size(); ++i) {
            const double th = 0.5 * M_PI * (gx[i] + 1.0);
            push(std::cos(th), gw[i] * std::pow(std::sin(th), n - 2.0));
        }
    }
    normalize(rule.weights);
    return rule;
}

Mat rotation_between(const Vec& a, const Vec& b) {
    const double c = a.dot(b);
    if (c <= -1.0 + 1e-12)
        throw std::invalid_argument("rotation_between: vectors are antipodal");
    const int n = static_cast<int>(a.size());
    const Vec u = a + b;
    return Mat::Identity(n, n) - (u * u.transpose()) / (1.0 + c) +
           2.0 * (b * a.transpose());
}

RotationRule rotation_rule(int n, int order) {
    if (n < 2) throw std::invalid_argument("rotation_rule: n must be >= 2");
    RotationRule rule;
    if (n == 2) {
        const int m = 4 * order;
        for (int j = 0; j < m; ++j) {
            const double phi = 2.0 * M_PI * (j + 0.5) / m;
            Mat k(2, 2);
            k << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
            rule.nodes.push_back(std::move(k));
            rule.weights.push_back(1.0 / m);
        }
        return rule;
    }
    const SphereRule sphere = sphere_rule(n, order);
    const RotationRule sub = rotation_rule(n - 1, order);
    Vec en = Vec::Zero(n);
    en[n - 1] = 1.0;
    for (size_t i = 0; i < sphere.nodes.size(); ++i) {
        const Mat R = rotation_between(en, sphere.nodes[i]);
        for (size_t j = 0; j < sub.nodes.size(); ++j) {
            Mat k = Mat::Identity(n, n);
            k.block(0, 0, n - 1, n - 1) = sub.nodes[j];
            rule.nodes.push_back(R * k);
            rule.weights.push_back(sphere.weights[i] * sub.weights[j]);
        }
    }
    return rule;
}

}  // namespace horo
