#include "horo/horosphere.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace horo {

Horosphere::Horosphere(int n, int d, Mat k, double t, Vec u, const NumericsConfig& cfg)
    : n_(n), d_(d), k_(std::move(k)), t_(t), u_(std::move(u)) {
    if (n < 2 || d < 1 || d > n - 1)
        throw std::invalid_argument("Horosphere: need n >= 2 and 1 <= d <= n-1");
    if (k_.rows() != n || k_.cols() != n)
        throw std::invalid_argument("Horosphere: k must be n x n");
    if (u_.size() != n - 1 - d)
        throw std::invalid_argument("Horosphere: u must have length n-1-d");
    const double ortho = (k_.transpose() * k_ - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
    if (ortho > 1e2 * cfg.rotation_tol || std::abs(k_.determinant() - 1.0) > 1e3 * cfg.rotation_tol)
        throw std::invalid_argument("Horosphere: k is not a rotation");
}

LorentzElement Horosphere::group() const {
    Vec v = Vec::Zero(n_ - 1);
    if (u_.size()) v.head(u_.size()) = u_;
    return make_k(k_) * make_a(t_, n_) * make_n(v);
}

Vec basic_cone_vector(int n) {
    Vec b = Vec::Zero(n + 1);
    b[n - 1] = 1.0;
    b[n] = 1.0;
    return b;
}

Horosphere basic_horosphere(int n, int d) {
    return Horosphere(n, d, Mat::Identity(n, n), 0.0, Vec::Zero(n - 1 - d));
}

Horosphere horosphere_from_group(const LorentzElement& g, int d) {
    const int n = g.n();
    // factor g = k a_t n_v by applying the NAK routine to g^{-1}
    const IwasawaFactors f = iwasawa_nak(g.inverse());
    // g^{-1} = n_v a_t k  =>  g = k^T a_{-t} n_{-v}
    const Mat k = f.k.transpose();
    const double t = -f.t;
    const Vec v = -f.v;
    return Horosphere(n, d, k, t, v.head(n - 1 - d));
}

Horosphere act(const LorentzElement& gamma, const Horosphere& xi) {
    return horosphere_from_group(gamma * xi.group(), xi.d());
}

bool contains(const Horosphere& xi, const HyperbolicPoint& x, double tol) {
    if (x.n() != xi.n()) throw std::invalid_argument("contains: dimension mismatch");
    const Vec y = xi.group().inverse().apply(x.coords());
    const int n = xi.n();
    // [y, b0] = y_{n+1} - y_n
    if (std::abs(y[n] - y[n - 1] - 1.0) > tol) return false;
    for (int j = 0; j < n - 1 - xi.d(); ++j)
        if (std::abs(y[j]) > tol) return false;
    return true;
}

bool stabilizer_check(const LorentzElement& m_alpha_beta, const LorentzElement& n_v, int d,
                      int samples, std::uint64_t seed) {
    const int n = m_alpha_beta.n();
    const LorentzElement g = m_alpha_beta * n_v;
    const Horosphere xi0 = basic_horosphere(n, d);

    // orbit samples n_w x0, w Gaussian in the trailing d block
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int s = 0; s < samples; ++s) {
        Vec w = Vec::Zero(n - 1);
        for (int j = n - 1 - d; j < n - 1; ++j) w[j] = gauss(rng);
        const HyperbolicPoint p = make_n(w).apply(origin(n));
        if (!contains(xi0, g.apply(p), 1e-9)) return false;
    }

    // commutation m n_v = n_{beta v} m with beta the trailing d x d block;
    // the v of an n_v matrix sits in the head of its last column
    const Mat& mm = m_alpha_beta.matrix();
    Vec vn = n_v.matrix().col(n).head(n - 1);
    Vec beta_v = Vec::Zero(n - 1);
    beta_v.tail(d) = mm.block(n - 1 - d, n - 1 - d, d, d) * vn.tail(d);
    beta_v.head(n - 1 - d) = vn.head(n - 1 - d);
    const Mat lhs = (m_alpha_beta * n_v).matrix();
    const Mat rhs = (make_n(beta_v) * m_alpha_beta).matrix();
    if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-9) return false;
    return true;
}

int xi_dimension(int n, int d) {
    if (n < 2 || d < 1 || d > n - 1)
        throw std::invalid_argument("xi_dimension: need n >= 2 and 1 <= d <= n-1");
    return (n - d) * (d + 2) - 1;
}

}  // namespace horo
