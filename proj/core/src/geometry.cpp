#include "horo/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "horo/special.hpp"

namespace horo {

double minkowski_form(const Vec& x, const Vec& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("minkowski_form: dimension mismatch");
    const Eigen::Index n = x.size() - 1;
    return x[n] * y[n] - x.head(n).dot(y.head(n));
}

Mat minkowski_matrix(int n) {
    Mat J = -Mat::Identity(n + 1, n + 1);
    J(n, n) = 1.0;
    return J;
}

HyperbolicPoint::HyperbolicPoint(Vec coords, const NumericsConfig& cfg) : c_(std::move(coords)) {
    if (c_.size() < 3)
        throw std::invalid_argument("HyperbolicPoint: need n >= 2");
    const double q = minkowski_form(c_, c_);
    if (std::abs(q - 1.0) > 1e4 * cfg.on_sheet_tol * std::max(1.0, c_.squaredNorm()))
        throw GeometryError("HyperbolicPoint: [x,x] != 1");
    if (c_[c_.size() - 1] < 1.0 - cfg.on_sheet_tol)
        throw GeometryError("HyperbolicPoint: not on the upper sheet");
}

HyperbolicPoint origin(int n) {
    Vec c = Vec::Zero(n + 1);
    c[n] = 1.0;
    return HyperbolicPoint(std::move(c));
}

LorentzElement LorentzElement::from_matrix(Mat m, const NumericsConfig& cfg) {
    if (m.rows() != m.cols() || m.rows() < 3)
        throw std::invalid_argument("LorentzElement: need square matrix of size >= 3");
    const int n = static_cast<int>(m.rows()) - 1;
    const Mat J = minkowski_matrix(n);
    // backward-error scaling: roundoff in g^T J g grows with |g|^2
    const double norm = m.cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, norm * norm);
    const double res = (m.transpose() * J * m - J).cwiseAbs().maxCoeff();
    if (res > 1e2 * cfg.group_identity_tol * scale)
        throw GeometryError("LorentzElement: g^T J g != J");
    if (std::abs(m.determinant() - 1.0) > 1e3 * cfg.group_identity_tol * scale)
        throw GeometryError("LorentzElement: det g != 1");
    if (m(n, n) < 0.0)
        throw GeometryError("LorentzElement: not in the identity component");
    return LorentzElement(std::move(m));
}

HyperbolicPoint LorentzElement::apply(const HyperbolicPoint& x) const {
    return HyperbolicPoint(m_ * x.coords());
}

LorentzElement LorentzElement::operator*(const LorentzElement& other) const {
    return LorentzElement(m_ * other.m_);
}

LorentzElement LorentzElement::inverse() const {
    const Mat J = minkowski_matrix(n());
    return LorentzElement(J * m_.transpose() * J);
}

LorentzElement LorentzElement::identity(int n) {
    return LorentzElement(Mat::Identity(n + 1, n + 1));
}

LorentzElement make_n(const Vec& v) {
    const int n = static_cast<int>(v.size()) + 1;
    const double q = 0.5 * v.squaredNorm();
    Mat m = Mat::Identity(n + 1, n + 1);
    m.block(0, 0, n - 1, n - 1) = Mat::Identity(n - 1, n - 1);
    m.block(0, n - 1, n - 1, 1) = -v;
    m.block(0, n, n - 1, 1) = v;
    m.block(n - 1, 0, 1, n - 1) = v.transpose();
    m(n - 1, n - 1) = 1.0 - q;
    m(n - 1, n) = q;
    m.block(n, 0, 1, n - 1) = v.transpose();
    m(n, n - 1) = -q;
    m(n, n) = 1.0 + q;
    return LorentzElement::from_matrix(std::move(m));
}

LorentzElement make_a(double t, int n) {
    Mat m = Mat::Identity(n + 1, n + 1);
    const double ch = std::cosh(t), sh = std::sinh(t);
    m(n - 1, n - 1) = ch;
    m(n - 1, n) = sh;
    m(n, n - 1) = sh;
    m(n, n) = ch;
    return LorentzElement::from_matrix(std::move(m));
}

LorentzElement make_k(const Mat& k, const NumericsConfig& cfg) {
    if (k.rows() != k.cols())
        throw std::invalid_argument("make_k: k must be square");
    const int n = static_cast<int>(k.rows());
    const double ortho = (k.transpose() * k - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
    if (ortho > 1e2 * cfg.rotation_tol || std::abs(k.determinant() - 1.0) > 1e3 * cfg.rotation_tol)
        throw std::invalid_argument("make_k: input is not a rotation");
    Mat m = Mat::Identity(n + 1, n + 1);
    m.block(0, 0, n, n) = k;
    return LorentzElement::from_matrix(std::move(m));
}

IwasawaFactors iwasawa_nak(const LorentzElement& g, const NumericsConfig& cfg) {
    const int n = g.n();
    const Vec p = g.apply(origin(n).coords());
    const double em = p[n] - p[n - 1];  // e^{-t}
    if (!(em > 0.0) || !std::isfinite(em))
        throw DecompositionError("iwasawa_nak: chart inversion out of range");
    IwasawaFactors f;
    f.t = -std::log(em);
    f.v = std::exp(f.t) * p.head(n - 1);
    const LorentzElement na_inv = make_a(-f.t, n) * make_n(-f.v);
    const Mat kfull = (na_inv * g).matrix();
    f.k = kfull.block(0, 0, n, n);
    const Mat reassembled = (make_n(f.v) * make_a(f.t, n) * make_k(f.k, cfg)).matrix();
    const double res = (reassembled - g.matrix()).cwiseAbs().maxCoeff();
    if (res > 10.0 * cfg.reassembly_tol)
        throw DecompositionError("iwasawa_nak: reassembly residual too large");
    return f;
}

HyperbolicPoint hyperbolic_coords(const Vec& theta, double r, const NumericsConfig& cfg) {
    if (r < 0.0) throw std::invalid_argument("hyperbolic_coords: r must be >= 0");
    if (std::abs(theta.norm() - 1.0) > 1e2 * cfg.on_sheet_tol)
        throw std::invalid_argument("hyperbolic_coords: theta must be a unit vector");
    const int n = static_cast<int>(theta.size());
    Vec c(n + 1);
    c.head(n) = theta * std::sinh(r);
    c[n] = std::cosh(r);
    return HyperbolicPoint(std::move(c));
}

HyperbolicPoint horospherical_coords(const Vec& v, double t) {
    const int n = static_cast<int>(v.size()) + 1;
    const double q = 0.5 * v.squaredNorm() * std::exp(-t);
    Vec c(n + 1);
    c.head(n - 1) = std::exp(-t) * v;
    c[n - 1] = std::sinh(t) + q;
    c[n] = std::cosh(t) + q;
    return HyperbolicPoint(std::move(c));
}

HorosphericalParams horospherical_params(const HyperbolicPoint& x) {
    const int n = x.n();
    const Vec& c = x.coords();
    const double em = c[n] - c[n - 1];
    if (!(em > 0.0))
        throw GeometryError("horospherical_params: x_{n+1} - x_n must be positive on the sheet");
    HorosphericalParams p;
    p.t = -std::log(em);
    p.v = std::exp(p.t) * c.head(n - 1);
    return p;
}

LorentzElement transport_to(const HyperbolicPoint& x) {
    const auto p = horospherical_params(x);
    return make_n(p.v) * make_a(p.t, x.n());
}

double geodesic_distance(const HyperbolicPoint& x, const HyperbolicPoint& y,
                         const NumericsConfig& cfg) {
    double q = minkowski_form(x.coords(), y.coords());
    if (q < 1.0 - cfg.on_sheet_tol * 1e2 * std::max(1.0, x.last() * y.last()))
        throw GeometryError("geodesic_distance: form value below 1; points not on one sheet");
    if (q < 1.0) q = 1.0;
    return std::acosh(q);
}

Estimate radial_measure_integral(const Profile1D& f0, int n, const QuadratureSpec& spec) {
    spec.validate();
    // (s^2-1)^{n/2-1} grows like s^{n-2}
    const double s_max = f0.tail().truncation_point(0.1 * spec.abs_tolerance, n - 2.0);
    // substitute s = 1 + sig^2 so half-integer weights become smooth
    auto integrand = [&](double sig) {
        const double s = 1.0 + sig * sig;
        return 2.0 * f0(s) * std::pow(sig, n - 1.0) * std::pow(2.0 + sig * sig, 0.5 * n - 1.0);
    };
    Estimate e = integrate(integrand, 0.0, std::sqrt(s_max - 1.0), spec);
    const double sigma = sphere_area(n - 1);
    e.value *= sigma;
    e.abs_error *= sigma;
    return e;
}

}  // namespace horo
