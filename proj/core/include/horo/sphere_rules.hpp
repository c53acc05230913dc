#pragma once

#include <vector>

#include "horo/geometry.hpp"

namespace horo {

/// Nodes on S^{n-1} (or matrices in SO(n)) with weights normalized to sum 1,
/// i.e. the rules compute averages.
struct SphereRule {
    std::vector<Vec> nodes;
    std::vector<double> weights;
};

struct RotationRule {
    std::vector<Mat> nodes;
    std::vector<double> weights;
};

/// Product rule on S^{n-1} in R^n: trapezoid in the periodic angle,
/// Gauss-Legendre in the polar directions.  Spectrally accurate for smooth
/// integrands.  `order` scales every factor.
SphereRule sphere_rule(int n, int order);

/// 1D rule for averages of F(theta . m) over S^{n-1}: returns abscissae in
/// the cosine c in [-1,1] with normalized weights carrying (1-c^2)^{(n-3)/2}.
SphereRule zonal_angle_rule(int n, int order);

/// Haar-average rule on SO(n) via the recursive sphere-times-SO(n-1)
/// factorization.  Node counts grow quickly with n; intended for n <= 4.
RotationRule rotation_rule(int n, int order);

/// The rotation in span(a, b) taking unit vector a to unit vector b.
/// Requires a . b > -1.
Mat rotation_between(const Vec& a, const Vec& b);

}  // namespace horo
