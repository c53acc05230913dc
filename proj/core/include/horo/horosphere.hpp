#pragma once

#include <cstdint>

#include "horo/geometry.hpp"

namespace horo {

/// A d-dimensional horosphere xi = k a_t n_u xi_0, stored parametrically.
/// u lives in the first n-1-d horospherical directions (empty for d = n-1).
/// The triple is not unique (k may absorb block rotations fixing xi_0), so
/// horosphere equality is extensional: compare point sets via contains().
class Horosphere {
  public:
    Horosphere(int n, int d, Mat k, double t, Vec u, const NumericsConfig& cfg = {});

    int n() const { return n_; }
    int d() const { return d_; }
    const Mat& k() const { return k_; }
    double t() const { return t_; }
    const Vec& u() const { return u_; }
    double u_norm() const { return u_.size() ? u_.norm() : 0.0; }

    /// The group element k a_t n_u (u embedded in the leading block).
    LorentzElement group() const;

  private:
    int n_, d_;
    Mat k_;
    double t_;
    Vec u_;
};

/// Cone point (0, ..., 0, 1, 1) defining the basic horosphere.
Vec basic_cone_vector(int n);

/// k = I, t = 0, u = 0.
Horosphere basic_horosphere(int n, int d);

/// Parameters (k, t, u) of g xi_0: factor g = k a_t n_v and drop the
/// trailing d-block of v (it stabilizes xi_0).
Horosphere horosphere_from_group(const LorentzElement& g, int d);

/// gamma . xi as a horosphere.
Horosphere act(const LorentzElement& gamma, const Horosphere& xi);

/// Membership test: transport x back by (k a_t n_u)^{-1} and check the
/// defining relations of the basic horosphere ([y, b0] = 1 and the leading
/// n-1-d coordinates vanish).
bool contains(const Horosphere& xi, const HyperbolicPoint& x, double tol);

/// Verifies that g = m n_v stabilizes the basic horosphere: `samples` random
/// orbit points stay on it, and the block commutation m n_v = n_{beta v} m
/// holds.  Inputs violating the stabilizer block structure yield false.
bool stabilizer_check(const LorentzElement& m_alpha_beta, const LorentzElement& n_v, int d,
                      int samples, std::uint64_t seed = 1234ULL);

/// dim Xi_d = (n-d)(d+2) - 1.
int xi_dimension(int n, int d);

}  // namespace horo
