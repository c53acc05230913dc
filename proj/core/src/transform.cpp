#include "horo/transform.hpp"

#include <cmath>
#include <cstring>
#include <mutex>
#include <string>
#include <unordered_map>

#include "horo/parallel.hpp"
#include "horo/quadrature.hpp"
#include "horo/special.hpp"
#include "horo/sphere_rules.hpp"

namespace horo {

struct ImageCache {
    std::unordered_map<std::string, double> values;
    std::mutex mutex;
};

namespace {

std::string cache_key(const Horosphere& xi) {
    std::string key;
    key.reserve(16 * (2 + xi.u().size() + xi.k().size()));
    auto push = [&key](double v) {
        char buf[sizeof(double)];
        std::memcpy(buf, &v, sizeof(double));
        key.append(buf, sizeof(double));
    };
    push(static_cast<double>(xi.d()));
    push(xi.t());
    for (Eigen::Index i = 0; i < xi.u().size(); ++i) push(xi.u()[i]);
    for (Eigen::Index i = 0; i < xi.k().size(); ++i) push(xi.k().data()[i]);
    return key;
}

QuadratureSpec tightened(const QuadratureSpec& spec, double factor = 10.0) {
    QuadratureSpec inner = spec;
    inner.rel_tolerance = spec.rel_tolerance / factor;
    inner.abs_tolerance = spec.abs_tolerance / factor;
    return inner;
}

double clamp_tol(const QuadratureSpec& spec, double scale) {
    return std::max(spec.abs_tolerance, spec.rel_tolerance * std::abs(scale));
}

/// Average of F over S^{n-1} with order doubling.
Estimate average_over_sphere(int n, const std::function<double(const Vec&)>& F,
                             const QuadratureSpec& spec, int start_order = 8,
                             int max_order = 64) {
    Estimate out;
    double prev = 0.0;
    bool have_prev = false;
    for (int order = start_order;; order *= 2) {
        const SphereRule rule = sphere_rule(n, order);
        double sum = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * F(rule.nodes[i]);
        out.evaluations += static_cast<long>(rule.nodes.size());
        if (have_prev) {
            out.abs_error = std::abs(sum - prev);
            if (out.abs_error <= clamp_tol(spec, sum)) {
                out.value = sum;
                return out;
            }
        }
        prev = sum;
        have_prev = true;
        if (order >= max_order) {
            out.value = sum;
            out.converged = false;
            return out;
        }
    }
}

Estimate average_over_rotations(int n, const std::function<double(const Mat&)>& F,
                                const QuadratureSpec& spec) {
    // Node counts grow as order^3 (n=3) and worse beyond; two-level compare.
    const int o1 = n <= 3 ? 5 : 2;
    const int o2 = n <= 3 ? 8 : 3;
    Estimate out;
    double v1 = 0.0;
    for (int pass = 0; pass < 2; ++pass) {
        const RotationRule rule = rotation_rule(n, pass == 0 ? o1 : o2);
        double sum = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * F(rule.nodes[i]);
        out.evaluations += static_cast<long>(rule.nodes.size());
        if (pass == 0) {
            v1 = sum;
        } else {
            out.value = sum;
            out.abs_error = std::abs(sum - v1);
            out.converged = out.abs_error <= 10.0 * clamp_tol(spec, sum);
        }
    }
    return out;
}

/// Geodesic reach of the field's support (or effective support) measured
/// from its center, plus the center itself.
struct FieldReach {
    HyperbolicPoint center;
    double radius;
};

FieldReach field_reach(const ScalarField& f, double eps, double growth_pow) {
    const int n = f.n;
    HyperbolicPoint center = f.shift ? f.shift->apply(origin(n)) : origin(n);
    double radius;
    if (f.zonal) {
        const TailBound& tail = f.zonal->tail();
        double s_hi;
        if (tail.kind == TailBound::Kind::Compact)
            s_hi = tail.s_max;
        else
            s_hi = tail.truncation_point(eps, growth_pow);
        radius = std::acosh(std::max(1.0, s_hi));
    } else if (std::isfinite(f.support_radius)) {
        center = origin(n);
        radius = f.support_radius;
    } else {
        throw std::invalid_argument("field has neither compact support nor tail metadata");
    }
    return {center, radius};
}

Vec embed_u(int n, int d, double u_norm) {
    Vec u = Vec::Zero(n - 1 - d);
    if (u.size()) u[0] = u_norm;
    return u;
}

}  // namespace

double HorosphericalImage::operator()(const Horosphere& xi) const {
    switch (provenance) {
        case Provenance::ExactZonal: {
            if (!shift) return forward_zonal(*zonal, xi.t(), xi.u_norm(), d, quad).value;
            const Horosphere moved = horosphere_from_group(shift->inverse() * xi.group(), d);
            return forward_zonal(*zonal, moved.t(), moved.u_norm(), d, quad).value;
        }
        case Provenance::Quadrature: {
            if (cache) {
                const std::string key = cache_key(xi);
                {
                    std::lock_guard<std::mutex> lock(cache->mutex);
                    auto it = cache->values.find(key);
                    if (it != cache->values.end()) return it->second;
                }
                const double v = forward_general(*field, xi, quad).value;
                std::lock_guard<std::mutex> lock(cache->mutex);
                cache->values.emplace(key, v);
                return v;
            }
            return forward_general(*field, xi, quad).value;
        }
        case Provenance::User:
        default:
            return user_fn(xi);
    }
}

HorosphericalImage image_from_zonal(std::shared_ptr<const RadialProfile> f0, int n, int d,
                                    const QuadratureSpec& quad) {
    HorosphericalImage img;
    img.provenance = HorosphericalImage::Provenance::ExactZonal;
    img.n = n;
    img.d = d;
    img.zonal = std::move(f0);
    img.quad = quad;
    return img;
}

HorosphericalImage image_from_zonal_shifted(std::shared_ptr<const RadialProfile> f0,
                                            const LorentzElement& gamma, int d,
                                            const QuadratureSpec& quad) {
    HorosphericalImage img = image_from_zonal(std::move(f0), gamma.n(), d, quad);
    img.shift = gamma;
    return img;
}

HorosphericalImage image_from_field(std::shared_ptr<const ScalarField> f, int d,
                                    const QuadratureSpec& quad) {
    HorosphericalImage img;
    img.provenance = HorosphericalImage::Provenance::Quadrature;
    img.n = f->n;
    img.d = d;
    img.field = std::move(f);
    img.quad = quad;
    img.cache = std::make_shared<ImageCache>();
    return img;
}

HorosphericalImage image_from_function(std::function<double(const Horosphere&)> fn, int n, int d) {
    HorosphericalImage img;
    img.provenance = HorosphericalImage::Provenance::User;
    img.n = n;
    img.d = d;
    img.user_fn = std::move(fn);
    return img;
}

HorosphericalImage image_of(const ScalarField& f, int d, const QuadratureSpec& quad) {
    if (f.zonal && f.shift) return image_from_zonal_shifted(f.zonal, *f.shift, d, quad);
    if (f.zonal) return image_from_zonal(f.zonal, f.n, d, quad);
    return image_from_field(std::make_shared<ScalarField>(f), d, quad);
}

Estimate forward_general(const ScalarField& f, const Horosphere& xi, const QuadratureSpec& spec) {
    spec.validate();
    const int n = xi.n();
    const int d = xi.d();
    if (f.n != n) throw std::invalid_argument("forward_general: dimension mismatch");
    if (!std::isfinite(f.support_radius) && f.decay_mu && *f.decay_mu <= 0.5 * d)
        throw DivergenceError("forward_general: decay too weak for convergence (mu <= d/2)");

    const LorentzElement G = xi.group();
    const Vec z = G.inverse().apply(origin(n)).coords();
    const double q = z[n] - z[n - 1];  // e^{-t} of z; positive on the sheet
    const Vec b = z.segment(n - 1 - d, d);

    double halfwidth = spec.truncation_radius;
    if (halfwidth <= 0.0) {
        double s_cut;
        if (std::isfinite(f.support_radius))
            s_cut = std::cosh(f.support_radius);
        else
            s_cut = f.tail.truncation_point(0.1 * spec.abs_tolerance, 0.5 * d);
        // [G n_w x0, x0] = q |w|^2/2 - w.b + z_{n+1} >= q|w|^2/2 - |b||w| + z_{n+1}
        const double disc = b.squaredNorm() + 2.0 * q * (s_cut - z[n]);
        if (disc <= 0.0) return Estimate{0.0, 0.0, true, 0};
        halfwidth = (b.norm() + std::sqrt(disc)) / q;
    }

    const Mat& Gm = G.matrix();
    auto F = [&](const double* w) {
        Vec a = Vec::Zero(n + 1);
        double w2 = 0.0;
        for (int i = 0; i < d; ++i) {
            a[n - 1 - d + i] = w[i];
            w2 += w[i] * w[i];
        }
        a[n - 1] = 0.5 * w2;
        a[n] = 1.0 + 0.5 * w2;
        return f(HyperbolicPoint(Gm * a));
    };
    return integrate_box(F, d, halfwidth, spec);
}

Estimate forward_zonal(const Profile1D& f0, double t, double u_norm, int d,
                       const QuadratureSpec& spec) {
    if (d < 1) throw std::invalid_argument("forward_zonal: d must be >= 1");
    if (u_norm < 0.0) throw std::invalid_argument("forward_zonal: u_norm must be >= 0");
    const double eta = std::cosh(t) + 0.5 * u_norm * u_norm * std::exp(t);
    Estimate e = rl_integral_minus(f0, eta, 0.5 * d, spec);
    const double c = zonal_abel_constant(d) * std::exp(-0.5 * t * d);
    e.value *= c;
    e.abs_error *= c;
    return e;
}

Estimate spherical_mean_raw(const ScalarField& f, const HyperbolicPoint& x, double s,
                            const QuadratureSpec& spec) {
    if (s < 1.0) throw std::invalid_argument("spherical_mean: s must be >= 1");
    if (s == 1.0) return Estimate{f(x), 0.0, true, 1};
    const int n = x.n();
    const double r = std::acosh(s);
    const LorentzElement rx = transport_to(x);
    const double sh = std::sinh(r), ch = std::cosh(r);
    auto F = [&](const Vec& theta) {
        Vec c(n + 1);
        c.head(n) = sh * theta;
        c[n] = ch;
        return f(HyperbolicPoint(rx.apply(c)));
    };
    return average_over_sphere(n, F, spec);
}

Estimate spherical_mean(const ScalarField& f, const HyperbolicPoint& x, double s,
                        const QuadratureSpec& spec) {
    if (s < 1.0) throw std::invalid_argument("spherical_mean: s must be >= 1");
    if (s == 1.0) return Estimate{f(x), 0.0, true, 1};
    if (!f.zonal) return spherical_mean_raw(f, x, s, spec);
    const int n = x.n();
    const double r = std::acosh(s);
    const LorentzElement rx = transport_to(x);
    const LorentzElement H = f.shift ? (f.shift->inverse() * rx) : rx;
    const Vec zeta = H.inverse().apply(origin(n)).coords();
    const double R = zeta.head(n).norm();
    const double sh = std::sinh(r), ch = std::cosh(r);
    const auto& prof = *f.zonal;
    // value along the sphere depends on the single angle theta . zeta-hat
    Estimate out;
    double prev = 0.0;
    bool have_prev = false;
    for (int order = 8;; order *= 2) {
        const SphereRule rule = zonal_angle_rule(n, order);
        double sum = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); ++i)
            sum += rule.weights[i] * prof(ch * zeta[n] - sh * R * rule.nodes[i][0]);
        out.evaluations += static_cast<long>(rule.nodes.size());
        if (have_prev) {
            out.abs_error = std::abs(sum - prev);
            if (out.abs_error <= clamp_tol(spec, sum)) {
                out.value = sum;
                return out;
            }
        }
        prev = sum;
        have_prev = true;
        if (order >= 128) {
            out.value = sum;
            out.converged = false;
            return out;
        }
    }
}

Profile1D spherical_mean_profile(const ScalarField& f, const HyperbolicPoint& x,
                                 const QuadratureSpec& spec, int r_nodes) {
    const FieldReach reach = field_reach(f, 0.05 * spec.abs_tolerance, 0.0);
    const double center_dist = geodesic_distance(x, reach.center);
    const double r_sup = center_dist + reach.radius + 0.05;
    if (r_nodes <= 0)
        r_nodes = std::min(1601, std::max(401, static_cast<int>(r_sup / 0.005)));
    std::vector<double> rs(r_nodes), ss(r_nodes), vals(r_nodes);
    for (int j = 0; j < r_nodes; ++j) {
        rs[j] = r_sup * j / (r_nodes - 1.0);
        ss[j] = std::cosh(rs[j]);
    }
    const QuadratureSpec inner = tightened(spec, 4.0);
    parallel_for(static_cast<size_t>(r_nodes), [&](size_t j) {
        vals[j] = j == 0 ? f(x) : spherical_mean(f, x, ss[j], inner).value;
    });
    return Profile1D::sampled(std::move(ss), std::move(vals),
                              TailBound::compact(std::cosh(r_sup)));
}

namespace {

struct MeanValueEval {
    Estimate est;
    bool zonal_route = false;
};

MeanValueEval mean_value_eval(const HorosphericalImage& phi, const HyperbolicPoint& x, double t,
                              const QuadratureSpec& spec) {
    const int n = phi.n;
    const int d = phi.d;
    MeanValueEval out;

    const bool zonal_backed =
        phi.provenance == HorosphericalImage::Provenance::ExactZonal ||
        (phi.provenance == HorosphericalImage::Provenance::Quadrature && phi.field->zonal);

    if (zonal_backed) {
        out.zonal_route = true;
        const std::optional<LorentzElement> gamma =
            phi.provenance == HorosphericalImage::Provenance::ExactZonal ? phi.shift
                                                                         : phi.field->shift;
        const LorentzElement rx = transport_to(x);
        const LorentzElement rt = gamma ? (gamma->inverse() * rx) : rx;
        const Vec z = rt.inverse().apply(origin(n)).coords();
        const double R = z.head(n).norm();
        const QuadratureSpec inner = tightened(spec);

        auto value_at = [&](double t_prime, double u_norm) {
            if (phi.provenance == HorosphericalImage::Provenance::ExactZonal)
                return forward_zonal(*phi.zonal, t_prime, u_norm, d, inner).value;
            Horosphere canon(n, d, Mat::Identity(n, n), t_prime, embed_u(n, d, u_norm));
            if (gamma) return phi(act(*gamma, canon));
            return phi(canon);
        };

        if (R < 1e-13) {
            out.est = Estimate{value_at(t, 0.0), 0.0, true, 1};
            return out;
        }
        auto F = [&](const Vec& qhat) {
            const double qn = R * qhat[n - 1];
            const double tp = t + std::log(z[n] - qn);
            const double un = std::exp(-tp) * R * qhat.head(n - 1 - d).norm();
            return value_at(tp, un);
        };
        out.est = average_over_sphere(n, F, spec);
        return out;
    }

    const LorentzElement rx = transport_to(x);
    const LorentzElement at = make_a(t, n);
    if (d == n - 1) {
        // the horosphere depends on k only through k e_n
        Vec en = Vec::Zero(n);
        en[n - 1] = 1.0;
        auto F = [&](const Vec& theta) {
            const LorentzElement k = make_k(rotation_between(en, theta));
            return phi(horosphere_from_group(rx * k * at, d));
        };
        out.est = average_over_sphere(n, F, spec);
        return out;
    }
    auto F = [&](const Mat& k) { return phi(horosphere_from_group(rx * make_k(k) * at, d)); };
    out.est = average_over_rotations(n, F, spec);
    return out;
}

}  // namespace

Estimate mean_value(const HorosphericalImage& phi, const HyperbolicPoint& x, double t,
                    const QuadratureSpec& spec) {
    return mean_value_eval(phi, x, t, spec).est;
}

Estimate check_operator(const HorosphericalImage& phi, const HyperbolicPoint& x,
                        const QuadratureSpec& spec) {
    return mean_value(phi, x, 0.0, spec);
}

MeanValueProfile::MeanValueProfile(const HorosphericalImage& phi, const HyperbolicPoint& x,
                                   const QuadratureSpec& spec, int nodes) {
    const int n = phi.n;
    double T;
    if (phi.provenance == HorosphericalImage::Provenance::User) {
        if (spec.truncation_radius <= 0.0)
            throw std::invalid_argument(
                "MeanValueProfile: user images need spec.truncation_radius");
        T = spec.truncation_radius;
    } else {
        ScalarField probe;
        if (phi.provenance == HorosphericalImage::Provenance::Quadrature) {
            probe = *phi.field;
        } else {
            probe.n = n;
            probe.zonal = phi.zonal;
            probe.shift = phi.shift;
            probe.tail = phi.zonal->tail();
            if (probe.tail.kind == TailBound::Kind::Compact)
                probe.support_radius = std::acosh(probe.tail.s_max);
        }
        const FieldReach reach = field_reach(probe, 0.05 * spec.abs_tolerance, 0.5 * phi.d);
        T = geodesic_distance(x, reach.center) + reach.radius + 0.1;
    }
    T_ = T;
    if (nodes <= 0) nodes = std::min(1401, std::max(301, static_cast<int>(2.0 * T / 0.008)));
    if (nodes % 2 == 0) ++nodes;  // symmetric grid including t = 0
    std::vector<double> ts(nodes), vals(nodes), errs(nodes);
    for (int j = 0; j < nodes; ++j) ts[j] = -T + 2.0 * T * j / (nodes - 1.0);
    parallel_for(static_cast<size_t>(nodes), [&](size_t j) {
        const Estimate e = mean_value(phi, x, ts[j], spec);
        vals[j] = e.value;
        errs[j] = e.abs_error;
    });
    for (double e : errs) max_err_ = std::max(max_err_, e);
    spline_ = CubicSpline(std::move(ts), std::move(vals));
}

double MeanValueProfile::operator()(double t) const {
    if (std::abs(t) >= T_) return 0.0;
    return spline_(t);
}

namespace {

Estimate hstar_tau_integral(const HorosphericalImage& phi, const HyperbolicPoint& x,
                            const std::function<double(double)>& kernel_tau,
                            const QuadratureSpec& spec) {
    const int d = phi.d;
    MeanValueProfile mvp(phi, x, tightened(spec, 4.0));
    const double T = mvp.support_T();
    const double tau_max = std::cosh(T) - 1.0;
    auto integrand = [&](double tau) {
        const double t = std::acosh(1.0 + tau);
        const double w = mvp(t) * std::exp(0.5 * d * t) + mvp(-t) * std::exp(-0.5 * d * t);
        return kernel_tau(tau) * w;
    };
    Estimate e = integrate_tanh_sinh(integrand, 0.0, tau_max, spec);
    // propagate the profile error through the kernel mass
    QuadratureSpec loose = spec;
    loose.rel_tolerance = 1e-3;
    loose.abs_tolerance = 1e-6;
    auto kernel_mass = [&](double tau) {
        const double t = std::acosh(1.0 + tau);
        return std::abs(kernel_tau(tau)) * 2.0 * std::cosh(0.5 * d * t);
    };
    const double mass = integrate_tanh_sinh(kernel_mass, 0.0, tau_max, loose).value;
    e.abs_error += mvp.max_error() * mass;
    return e;
}

}  // namespace

Estimate hstar_alpha(const HorosphericalImage& phi, const HyperbolicPoint& x, double alpha,
                     const QuadratureSpec& spec) {
    const double c = dual_weight_constant(phi.n, phi.d, alpha);
    auto kernel = [alpha](double tau) { return std::pow(tau, 0.5 * alpha - 1.0); };
    Estimate e = hstar_tau_integral(phi, x, kernel, spec);
    e.value *= c;
    e.abs_error *= std::abs(c);
    return e;
}

Estimate hstar_log(const HorosphericalImage& phi, const HyperbolicPoint& x,
                   const QuadratureSpec& spec) {
    const int n = phi.n, d = phi.d;
    const double c = dual_log_constant(n, d);
    const double expo = 0.5 * (n - d) - 1.0;
    auto kernel = [expo](double tau) { return std::pow(tau, expo) * std::log(tau); };
    Estimate e = hstar_tau_integral(phi, x, kernel, spec);
    e.value *= c;
    e.abs_error *= std::abs(c);
    return e;
}

namespace {

/// int_{H^n} f dx via the zonal reduction (exact for zonal fields, spherical
/// means at the origin otherwise).
double field_volume_integral(const ScalarField& f, const QuadratureSpec& spec) {
    if (f.is_zonal()) return radial_measure_integral(*f.zonal, f.n, spec).value;
    const Profile1D prof = spherical_mean_profile(f, origin(f.n), spec);
    return radial_measure_integral(prof, f.n, spec).value;
}

}  // namespace

double fubini_identity_residual(const ScalarField& f, int d, const Mat& k,
                                const QuadratureSpec& spec) {
    const int n = f.n;
    if (d < 1 || d > n - 1) throw std::invalid_argument("fubini_identity_residual: bad d");
    const int m = n - 1 - d;
    const HorosphericalImage phi = image_of(f, d, tightened(spec));
    const FieldReach reach = field_reach(f, 0.05 * spec.abs_tolerance, 0.5 * (n - 1));
    const double center_dist = geodesic_distance(reach.center, origin(n));
    const double Tmax = reach.radius + center_dist + 0.1;
    const double s_cut = std::cosh(Tmax);

    auto xi_at = [&](double t, const Vec& u) { return Horosphere(n, d, k, t, u); };

    double lhs;
    if (m == 0) {
        auto g = [&](double t) { return phi(xi_at(t, Vec::Zero(0))); };
        lhs = integrate(g, -Tmax, Tmax, spec).value;
    } else if (f.zonal && !f.shift) {
        // u-integral is radial for zonal fields
        const double sig = sphere_area(m - 1);
        auto g = [&](double t) {
            const double cap = 2.0 * std::exp(-t) * (s_cut - std::cosh(t));
            if (cap <= 0.0) return 0.0;
            const double rho_max = std::sqrt(cap);
            auto h = [&](double rho) {
                Vec u = Vec::Zero(m);
                u[0] = rho;
                return phi(xi_at(t, u)) * std::pow(rho, m - 1.0);
            };
            return sig * integrate(h, 0.0, rho_max, tightened(spec)).value;
        };
        lhs = integrate(g, -Tmax, Tmax, spec).value;
    } else {
        if (m > 2)
            throw std::invalid_argument(
                "fubini_identity_residual: general fields supported for n-1-d <= 2 only");
        auto g = [&](double t) {
            const double cap = 2.0 * std::exp(-t) * (s_cut - std::cosh(t));
            if (cap <= 0.0) return 0.0;
            const double U = std::sqrt(cap);
            auto h = [&](const double* u) {
                Vec uv(m);
                for (int i = 0; i < m; ++i) uv[i] = u[i];
                return phi(xi_at(t, uv));
            };
            return integrate_box(h, m, U, tightened(spec)).value;
        };
        lhs = integrate(g, -Tmax, Tmax, spec).value;
    }
    const double rhs = field_volume_integral(f, tightened(spec));
    return std::abs(lhs - rhs);
}

double weighted_zonal_identity_residual(const ScalarField& f, int d, double alpha,
                                        const QuadratureSpec& spec) {
    if (!f.is_zonal())
        throw std::invalid_argument("weighted_zonal_identity_residual: zonal field required");
    const int n = f.n;
    if (d < 1 || d > n - 1) throw std::invalid_argument("weighted_zonal_identity_residual: bad d");
    if (alpha <= 0.0)
        throw std::invalid_argument("weighted_zonal_identity_residual: alpha must be positive");
    const RadialProfile& f0 = *f.zonal;
    const double s_cut =
        f0.tail().kind == TailBound::Kind::Compact
            ? f0.tail().s_max
            : f0.tail().truncation_point(0.05 * spec.abs_tolerance, 0.5 * (alpha + d));
    const double tau_max = s_cut - 1.0;
    const QuadratureSpec inner = tightened(spec);

    auto integrand = [&](double tau) {
        const double t = std::acosh(1.0 + tau);
        const double wp = forward_zonal(f0, t, 0.0, d, inner).value * std::exp(0.5 * d * t);
        const double wm = forward_zonal(f0, -t, 0.0, d, inner).value * std::exp(-0.5 * d * t);
        return std::pow(tau, 0.5 * alpha - 1.0) * (wp + wm);
    };
    const double lhs = integrate_tanh_sinh(integrand, 0.0, tau_max, spec).value;

    // c1 sigma_{n-1} int f0(s) (s-1)^{(alpha+d)/2-1} ds with s = 1 + sig^2
    auto rhs_integrand = [&](double sig) {
        return 2.0 * f0(1.0 + sig * sig) * std::pow(sig, alpha + d - 1.0);
    };
    const double rhs_int = integrate(rhs_integrand, 0.0, std::sqrt(tau_max), spec).value;
    const double rhs =
        weighted_identity_constant(n, d, alpha) * sphere_area(n - 1) * rhs_int;
    return std::abs(lhs - rhs);
}

SharpnessProbe sharpness_probe_with_profile(const RadialProfile& f0, double p, int n, int d,
                                            double cutoff, const QuadratureSpec& spec) {
    if (cutoff <= 1.0) throw std::invalid_argument("sharpness_probe: cutoff must exceed 1");
    SharpnessProbe probe;
    // L^p over {x_{n+1} <= cutoff}, integrated in y = log(s+1)
    auto lp_integrand = [&](double y) {
        const double s = std::exp(y) - 1.0;
        const double v = std::abs(f0(s));
        if (v <= 0.0) return 0.0;
        return std::pow(v, p) * std::pow(s * s - 1.0, 0.5 * n - 1.0) * (s + 1.0);
    };
    const double Ip =
        integrate(lp_integrand, std::log(2.0), std::log(cutoff + 1.0), spec).value;
    probe.lp_norm = std::pow(sphere_area(n - 1) * Ip, 1.0 / p);

    // zonal transform at eta = 2 truncated at the cutoff
    if (cutoff > 2.0) {
        const double split = std::min(4.0, cutoff);
        auto near = [&](double sig) {
            const double s = 2.0 + sig * sig;
            return 2.0 * f0(s) * std::pow(sig, d - 1.0);
        };
        double tail = 0.0;
        if (cutoff > split) {
            auto far = [&](double y) {
                const double s = std::exp(y);
                return f0(s) * std::pow(s - 2.0, 0.5 * d - 1.0) * s;
            };
            tail = integrate(far, std::log(split), std::log(cutoff), spec).value;
        }
        const double nearv = integrate(near, 0.0, std::sqrt(split - 2.0), spec).value;
        probe.transform_truncated =
            zonal_abel_constant(d) / std::tgamma(0.5 * d) * (nearv + tail);
    }
    return probe;
}

SharpnessProbe sharpness_probe(double p, int n, int d, double cutoff,
                               const QuadratureSpec& spec) {
    const auto f0 = sharpness_profile(p, n);
    return sharpness_probe_with_profile(*f0, p, n, d, cutoff, spec);
}

}  // namespace horo
