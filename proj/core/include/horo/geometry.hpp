#pragma once

#include <Eigen/Dense>

#include "horo/config.hpp"
#include "horo/profile.hpp"
#include "horo/quadrature.hpp"

namespace horo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Bilinear form [x,y] = -x_1 y_1 - ... - x_n y_n + x_{n+1} y_{n+1} on
/// vectors of length n+1.  Throws on dimension mismatch.
double minkowski_form(const Vec& x, const Vec& y);

/// diag(-1, ..., -1, +1) of size (n+1) x (n+1).
Mat minkowski_matrix(int n);

/// A point on the upper sheet { [x,x] = 1, x_{n+1} >= 1 } of the hyperboloid
/// in n+1 ambient coordinates.
class HyperbolicPoint {
  public:
    explicit HyperbolicPoint(Vec coords, const NumericsConfig& cfg = {});

    const Vec& coords() const { return c_; }
    double operator[](int i) const { return c_[i]; }  // 0-based
    int n() const { return static_cast<int>(c_.size()) - 1; }
    double last() const { return c_[c_.size() - 1]; }

  private:
    Vec c_;
};

/// Origin e_{n+1} of the hyperboloid.
HyperbolicPoint origin(int n);

/// Element of the identity component of the group preserving the form;
/// stored as a dense (n+1) x (n+1) matrix.
class LorentzElement {
  public:
    /// Validates g^T J g = J, det ~ +1 and that g maps the origin to the
    /// upper sheet.
    static LorentzElement from_matrix(Mat m, const NumericsConfig& cfg = {});

    const Mat& matrix() const { return m_; }
    int n() const { return static_cast<int>(m_.rows()) - 1; }

    Vec apply(const Vec& x) const { return m_ * x; }
    HyperbolicPoint apply(const HyperbolicPoint& x) const;

    LorentzElement operator*(const LorentzElement& other) const;
    /// Exact inverse J g^T J of a form-preserving matrix.
    LorentzElement inverse() const;

    static LorentzElement identity(int n);

  private:
    explicit LorentzElement(Mat m) : m_(std::move(m)) {}
    Mat m_;
};

/// Horospherical translation n_v, v in R^{n-1}.
LorentzElement make_n(const Vec& v);

/// Hyperbolic rotation a_t in the (x_n, x_{n+1}) plane.
LorentzElement make_a(double t, int n);

/// Embedding of k in SO(n) as block-diag(k, 1).  Validates k^T k = I and
/// det k = +1.
LorentzElement make_k(const Mat& k, const NumericsConfig& cfg = {});

struct IwasawaFactors {
    Vec v;     // length n-1
    double t = 0.0;
    Mat k;     // n x n rotation block
};

/// Unique factorization g = n_v a_t k.  The pair (v, t) is read off the
/// horospherical chart of p = g x0: p_{n+1} - p_n = e^{-t} exactly, then
/// v = e^t p_{1..n-1} and k = a_{-t} n_{-v} g.  Stable for |t| up to ~30 in
/// double precision; beyond that e^{t} overflows the chart inversion.
/// Throws DecompositionError if the reassembly residual exceeds
/// cfg.reassembly_tol * 10.
IwasawaFactors iwasawa_nak(const LorentzElement& g, const NumericsConfig& cfg = {});

/// x = theta sinh(r) + e_{n+1} cosh(r) for a unit direction theta in R^n.
HyperbolicPoint hyperbolic_coords(const Vec& theta, double r, const NumericsConfig& cfg = {});

/// x = n_v a_t x0 = (e^{-t} v, sinh t + |v|^2 e^{-t}/2, cosh t + |v|^2 e^{-t}/2).
HyperbolicPoint horospherical_coords(const Vec& v, double t);

struct HorosphericalParams {
    Vec v;
    double t = 0.0;
};

/// Inverse of horospherical_coords.
HorosphericalParams horospherical_params(const HyperbolicPoint& x);

/// Canonical transport r_x = n_v a_t with r_x x0 = x.
LorentzElement transport_to(const HyperbolicPoint& x);

/// arccosh of the form value; clamps arguments within on_sheet_tol below 1
/// and throws GeometryError beyond that.
double geodesic_distance(const HyperbolicPoint& x, const HyperbolicPoint& y,
                         const NumericsConfig& cfg = {});

/// Integral of a K-invariant function over the hyperboloid:
///   sigma_{n-1} * int_1^inf f0(s) (s^2-1)^{n/2-1} ds.
/// Truncation comes from the profile's tail bound; a tail that cannot pay
/// for the (s^2-1)^{n/2-1} growth raises DivergenceError.
Estimate radial_measure_integral(const Profile1D& f0, int n, const QuadratureSpec& spec);

}  // namespace horo
