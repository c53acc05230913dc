#include "horo/inversion.hpp"

#include <cmath>
#include <sstream>

#include "horo/parallel.hpp"
#include "horo/quadrature.hpp"
#include "horo/special.hpp"

namespace horo {

namespace {

QuadratureSpec tightened_spec(const QuadratureSpec& spec, double factor = 10.0) {
    QuadratureSpec inner = spec;
    inner.rel_tolerance = spec.rel_tolerance / factor;
    inner.abs_tolerance = spec.abs_tolerance / factor;
    return inner;
}

/// int_0^{tau_max} P(tau) kernel(tau) dtau with P the spherical-mean value
/// at s = 1 + tau; tanh-sinh absorbs the endpoint singularity of the kernel.
Estimate potential_tau_integral(const ScalarField& f, const HyperbolicPoint& x,
                                const std::function<double(double)>& kernel,
                                const QuadratureSpec& spec) {
    const int n = f.n;
    const bool at_origin = geodesic_distance(x, origin(n)) < 1e-12;
    if (f.is_zonal() && at_origin) {
        const auto& f0 = *f.zonal;
        const double s_hi = f0.tail().kind == TailBound::Kind::Compact
                                ? f0.tail().s_max
                                : f0.tail().truncation_point(0.1 * spec.abs_tolerance, 1.0);
        auto integrand = [&](double tau) { return f0(1.0 + tau) * kernel(tau); };
        return integrate_tanh_sinh(integrand, 0.0, s_hi - 1.0, spec);
    }
    const Profile1D prof = spherical_mean_profile(f, x, tightened_spec(spec));
    const double tau_max = prof.domain_hi() - 1.0;
    auto integrand = [&](double tau) { return prof(1.0 + tau) * kernel(tau); };
    return integrate_tanh_sinh(integrand, 0.0, tau_max, spec);
}

}  // namespace

PotentialSpec potential_spec(int n, double alpha) {
    PotentialSpec p;
    p.n = n;
    p.alpha = alpha;
    p.excluded = is_excluded_alpha(n, alpha);
    p.zeta = p.excluded ? std::numeric_limits<double>::quiet_NaN() : potential_zeta(n, alpha);
    return p;
}

Estimate potential_q_alpha(const ScalarField& f, const HyperbolicPoint& x, double alpha,
                           const QuadratureSpec& spec) {
    const int n = f.n;
    const double zeta = potential_zeta(n, alpha);  // validates alpha
    auto kernel = [alpha](double tau) { return std::pow(tau, 0.5 * alpha - 1.0); };
    Estimate e = potential_tau_integral(f, x, kernel, spec);
    const double c = zeta * sphere_area(n - 1);
    e.value *= c;
    e.abs_error *= std::abs(c);
    return e;
}

Estimate potential_q_alpha_zonal_origin(const RadialProfile& f0, int n, double alpha,
                                        const QuadratureSpec& spec) {
    const double zeta = potential_zeta(n, alpha);
    const double s_hi = f0.tail().kind == TailBound::Kind::Compact
                            ? f0.tail().s_max
                            : f0.tail().truncation_point(0.1 * spec.abs_tolerance,
                                                         std::max(0.0, 0.5 * alpha - 1.0));
    // s = 1 + sig^2
    auto integrand = [&](double sig) {
        return 2.0 * f0(1.0 + sig * sig) * std::pow(sig, alpha - 1.0);
    };
    Estimate e = alpha >= 0.5 ? integrate(integrand, 0.0, std::sqrt(s_hi - 1.0), spec)
                              : integrate_tanh_sinh(integrand, 0.0, std::sqrt(s_hi - 1.0), spec);
    const double c = zeta * sphere_area(n - 1);
    e.value *= c;
    e.abs_error *= std::abs(c);
    return e;
}

Estimate potential_q_n_log(const ScalarField& f, const HyperbolicPoint& x,
                           const QuadratureSpec& spec) {
    const int n = f.n;
    auto kernel = [n](double tau) { return std::pow(tau, 0.5 * n - 1.0) * std::log(tau); };
    Estimate e = potential_tau_integral(f, x, kernel, spec);
    const double c = potential_zeta_log(n) * sphere_area(n - 1);
    e.value *= c;
    e.abs_error *= std::abs(c);
    return e;
}

Estimate potential_q_n_log_zonal_origin(const RadialProfile& f0, int n,
                                        const QuadratureSpec& spec) {
    const double s_hi = f0.tail().kind == TailBound::Kind::Compact
                            ? f0.tail().s_max
                            : f0.tail().truncation_point(0.1 * spec.abs_tolerance, 0.5 * n);
    auto integrand = [&](double tau) {
        return f0(1.0 + tau) * std::pow(tau, 0.5 * n - 1.0) * std::log(tau);
    };
    Estimate e = integrate_tanh_sinh(integrand, 0.0, s_hi - 1.0, spec);
    const double c = potential_zeta_log(n) * sphere_area(n - 1);
    e.value *= c;
    e.abs_error *= std::abs(c);
    return e;
}

Estimate operator_b(const ScalarField& f, const HyperbolicPoint& x, const QuadratureSpec& spec) {
    const int n = f.n;
    auto kernel = [n](double tau) { return std::pow(tau, 0.5 * n - 1.0); };
    Estimate e = potential_tau_integral(f, x, kernel, spec);
    const double c = potential_zeta_log(n) * sphere_area(n - 1);
    e.value *= c;
    e.abs_error *= std::abs(c);
    return e;
}

double beltrami_radial(const Profile1D& F, double s, int n) {
    const double d1 = F.derivative(s, 1);
    const double d2 = F.derivative(s, 2);
    return (s * s - 1.0) * d2 + n * s * d1;
}

double d_alpha_radial(const Profile1D& F, double s, int n, double alpha) {
    return -beltrami_radial(F, s, n) - 0.25 * alpha * (2.0 * n - 2.0 - alpha) * F(s);
}

LaplacePolynomial laplace_poly_general(int n, int ell) {
    if (ell < 1) throw std::invalid_argument("laplace_poly_general: ell must be >= 1");
    LaplacePolynomial P;
    P.n = n;
    for (int i = 1; i <= ell; ++i) P.shifts.push_back(static_cast<double>(i) * (n - 1 - i));
    P.sign = ell % 2 == 0 ? 1.0 : -1.0;
    P.leading = 1.0;
    return P;
}

LaplacePolynomial laplace_poly_even_mean(int n, int d) {
    if (d % 2 != 0) throw std::invalid_argument("laplace_poly_even_mean: d must be even");
    LaplacePolynomial P;
    P.n = n;
    for (int i = 1; i <= d / 2; ++i) P.shifts.push_back(static_cast<double>(i) * (n - 1 - i));
    P.sign = 1.0;
    P.leading = poly_even_constant(n, d);
    return P;
}

namespace {

/// One application of Delta_H + shift on a uniform radial grid with even
/// extension; output valid on [0, hi-2].
std::vector<double> laplace_factor_pass(const std::vector<double>& G, double h, int n,
                                        double shift, size_t hi) {
    std::vector<double> out(G.size(), 0.0);
    auto at = [&](long j) { return G[static_cast<size_t>(j < 0 ? -j : j)]; };
    for (size_t j = 0; j + 2 <= hi; ++j) {
        const long i = static_cast<long>(j);
        const double d2 =
            (-at(i - 2) + 16.0 * at(i - 1) - 30.0 * at(i) + 16.0 * at(i + 1) - at(i + 2)) /
            (12.0 * h * h);
        double lap;
        if (j == 0) {
            lap = n * d2;
        } else {
            const double d1 = (at(i - 2) - 8.0 * at(i - 1) + 8.0 * at(i + 1) - at(i + 2)) /
                              (12.0 * h);
            lap = d2 + (n - 1.0) * d1 / std::tanh(j * h);
        }
        out[j] = lap + shift * G[j];
    }
    return out;
}

std::vector<double> apply_poly_values(const LaplacePolynomial& P, std::vector<double> values,
                                      double h, size_t& valid_hi) {
    for (double shift : P.shifts) {
        values = laplace_factor_pass(values, h, P.n, shift, valid_hi);
        valid_hi -= 2;
    }
    const double scale = P.sign * P.leading;
    for (auto& v : values) v *= scale;
    return values;
}

}  // namespace

Profile1D apply_laplace_polynomial_grid(const LaplacePolynomial& P,
                                        const std::function<double(double)>& value_at_r,
                                        double r_max, double h) {
    const size_t J = static_cast<size_t>(std::ceil(r_max / h));
    const size_t margin = 2 * P.shifts.size();
    const size_t total = J + margin + 1;
    std::vector<double> values(total);
    parallel_for(total, [&](size_t j) { values[j] = value_at_r(j * h); });
    size_t valid_hi = total - 1;
    values = apply_poly_values(P, std::move(values), h, valid_hi);
    std::vector<double> ss(valid_hi + 1), vv(valid_hi + 1);
    for (size_t j = 0; j <= valid_hi; ++j) {
        ss[j] = std::cosh(j * h);
        vv[j] = values[j];
    }
    return Profile1D::sampled(std::move(ss), std::move(vv),
                              TailBound::compact(std::cosh(valid_hi * h)));
}

Profile1D apply_laplace_polynomial(const LaplacePolynomial& P, const Profile1D& F, double h) {
    double s_hi = F.domain_hi();
    if (!std::isfinite(s_hi)) s_hi = F.tail().truncation_point(1e-12, 0.0);
    const double r_max = std::acosh(std::max(1.0 + 1e-12, s_hi));
    auto value_at_r = [&](double r) { return F(std::cosh(r)); };
    return apply_laplace_polynomial_grid(P, value_at_r, r_max, h);
}

HyperbolicPoint radial_probe(int n, double r) {
    Vec en = Vec::Zero(n);
    en[n - 1] = 1.0;
    return hyperbolic_coords(en, r);
}

double invert_mean_value(const HorosphericalImage& phi, const HyperbolicPoint& x, int d,
                         ExtrapolationRule rule, const QuadratureSpec& spec,
                         const MvOptions& opt, InversionDiagnostics* diag) {
    if (d != phi.d) throw std::invalid_argument("invert_mean_value: d mismatch with the image");
    const double c = zonal_abel_constant(d);
    MeanValueProfile mvp(phi, x, tightened_spec(spec, 4.0), opt.t_nodes);
    const double s_hi = std::cosh(mvp.support_T());
    const Profile1D psi = Profile1D::analytic(
        [&mvp, c, d](double r) {
            const double t = std::acosh(std::max(1.0, r));
            return std::exp(0.5 * d * t) * mvp(t) / c;
        },
        TailBound::compact(s_hi), 1.0);

    std::vector<double> nodes(opt.levels + 1);
    for (int j = 0; j <= opt.levels; ++j) {
        const double s = 1.0 + opt.delta0 * std::pow(2.0, -j);
        nodes[j] = frac_derivative_minus(psi, s, d, tightened_spec(spec, 2.0));
    }

    double value;
    RichardsonResult extrap;
    switch (rule) {
        case ExtrapolationRule::Richardson: {
            extrap = richardson_extrapolate(nodes);
            value = extrap.limit;
            if (extrap.last_diff > 10.0 * opt.target_tol) {
                std::ostringstream msg;
                msg << "invert_mean_value: extrapolation stagnated (last diff "
                    << extrap.last_diff << " vs target " << opt.target_tol << "); diagonal:";
                for (double v : extrap.diagonal) msg << " " << v;
                throw ReconstructionUnstable(msg.str());
            }
            break;
        }
        case ExtrapolationRule::Linear:
            value = 2.0 * nodes[opt.levels] - nodes[opt.levels - 1];
            break;
        case ExtrapolationRule::None:
        default:
            value = nodes[opt.levels];
            break;
    }
    if (diag) {
        diag->node_values = nodes;
        diag->extrapolants = extrap.diagonal;
        diag->quadrature = mvp.max_error();
        const double s_last = 1.0 + opt.delta0 * std::pow(2.0, -opt.levels);
        const double again =
            frac_derivative_minus(psi, 1.0 + 2.0 * (s_last - 1.0), d, tightened_spec(spec, 2.0));
        diag->differentiation = std::abs(again - nodes[opt.levels - 1]);
        diag->extrapolation = extrap.last_diff;
    }
    return value;
}

namespace {

ReconstructionReport report_from_profiles(const Profile1D& fine, const Profile1D& coarse,
                                          const std::vector<double>& probes_r,
                                          const std::function<double(double)>& reference_s,
                                          double quad_budget, double extra = 0.0) {
    ReconstructionReport rep;
    rep.probe_r = probes_r;
    for (double r : probes_r) {
        const double s = std::cosh(r);
        const double rec = fine(s) + extra;
        rep.reconstructed.push_back(rec);
        const double ref = reference_s ? reference_s(s) : 0.0;
        rep.reference.push_back(ref);
        const double err = std::abs(rec - ref);
        rep.abs_error.push_back(err);
        rep.sup_error = std::max(rep.sup_error, err);
        rep.budget.differentiation =
            std::max(rep.budget.differentiation, std::abs(fine(s) - coarse(s)));
    }
    rep.budget.quadrature = quad_budget;
    return rep;
}

ReconstructionReport poly_pipeline(const LaplacePolynomial& P,
                                   const std::function<double(double)>& value_at_r,
                                   const std::vector<double>& probes_r,
                                   const std::function<double(double)>& reference_s, double h,
                                   double extra_term) {
    double r_probe_max = 0.0;
    for (double r : probes_r) r_probe_max = std::max(r_probe_max, r);
    const double r_max = r_probe_max + 0.4;

    const size_t margin = 2 * P.shifts.size();
    const size_t J = static_cast<size_t>(std::ceil(r_max / h)) + 2 * margin;
    std::vector<double> values(J + 1);
    parallel_for(J + 1, [&](size_t j) { values[j] = value_at_r(j * h); });

    size_t hi_fine = J;
    std::vector<double> fine_vals = apply_poly_values(P, values, h, hi_fine);
    std::vector<double> ss(hi_fine + 1), vv(hi_fine + 1);
    for (size_t j = 0; j <= hi_fine; ++j) {
        ss[j] = std::cosh(j * h);
        vv[j] = fine_vals[j];
    }
    Profile1D fine = Profile1D::sampled(std::move(ss), std::move(vv),
                                        TailBound::compact(std::cosh(hi_fine * h)));

    // same samples at doubled spacing for a differentiation-error estimate
    std::vector<double> sub;
    for (size_t j = 0; j < values.size(); j += 2) sub.push_back(values[j]);
    size_t hi_coarse = sub.size() - 1;
    std::vector<double> coarse_vals = apply_poly_values(P, std::move(sub), 2.0 * h, hi_coarse);
    std::vector<double> ss2(hi_coarse + 1), vv2(hi_coarse + 1);
    for (size_t j = 0; j <= hi_coarse; ++j) {
        ss2[j] = std::cosh(j * 2.0 * h);
        vv2[j] = coarse_vals[j];
    }
    Profile1D coarse = Profile1D::sampled(std::move(ss2), std::move(vv2),
                                          TailBound::compact(std::cosh(hi_coarse * 2.0 * h)));

    return report_from_profiles(fine, coarse, probes_r, reference_s, 0.0, extra_term);
}

}  // namespace

ReconstructionReport invert_poly_even_d(const HorosphericalImage& phi,
                                        const std::vector<double>& probes_r,
                                        const std::function<double(double)>& reference_profile_s,
                                        const QuadratureSpec& spec, double grid_h) {
    if (phi.d % 2 != 0)
        throw std::invalid_argument("invert_poly_even_d: d must be even");
    const LaplacePolynomial P = laplace_poly_even_mean(phi.n, phi.d);
    auto value_at_r = [&](double r) {
        return check_operator(phi, radial_probe(phi.n, r), spec).value;
    };
    return poly_pipeline(P, value_at_r, probes_r, reference_profile_s, grid_h, 0.0);
}

ReconstructionReport invert_poly_general(const HorosphericalImage& phi, int ell,
                                         const std::vector<double>& probes_r,
                                         const std::function<double(double)>& reference_profile_s,
                                         const QuadratureSpec& spec, double grid_h) {
    const int n = phi.n, d = phi.d;
    if (n % 2 == 1) {
        if (2 * ell < d)
            throw std::invalid_argument("invert_poly_general: need ell >= d/2 for odd n");
        if (2 * ell == d) return invert_poly_even_d(phi, probes_r, reference_profile_s, spec, grid_h);
        const double alpha = 2.0 * ell - d;
        const LaplacePolynomial P = laplace_poly_general(n, ell);
        auto value_at_r = [&](double r) {
            return hstar_alpha(phi, radial_probe(n, r), alpha, spec).value;
        };
        return poly_pipeline(P, value_at_r, probes_r, reference_profile_s, grid_h, 0.0);
    }
    if (n == 2) {
        if (d != 1) throw std::invalid_argument("invert_poly_general: n = 2 requires d = 1");
        const LaplacePolynomial P = laplace_poly_general(2, 1);  // -Delta_H
        auto value_at_r = [&](double r) {
            return hstar_log(phi, radial_probe(2, r), spec).value;
        };
        // correction term (1/4pi) int phi(a_t xi_0) dt
        double T = 20.0;
        if (phi.provenance != HorosphericalImage::Provenance::User) {
            MeanValueProfile mvp(phi, origin(2), spec);
            T = mvp.support_T();
        } else if (spec.truncation_radius > 0.0) {
            T = spec.truncation_radius;
        }
        auto along_a = [&](double t) {
            return phi(Horosphere(2, 1, Mat::Identity(2, 2), t, Vec::Zero(0)));
        };
        const double corr = integrate(along_a, -T, T, spec).value / (4.0 * M_PI);
        return poly_pipeline(P, value_at_r, probes_r, reference_profile_s, grid_h, corr);
    }
    const LaplacePolynomial P = laplace_poly_general(n, n / 2);
    auto value_at_r = [&](double r) { return hstar_log(phi, radial_probe(n, r), spec).value; };
    return poly_pipeline(P, value_at_r, probes_r, reference_profile_s, grid_h, 0.0);
}

double d_alpha_recursion_residual(const ScalarField& f, double alpha,
                                  const std::vector<double>& probes_r,
                                  const QuadratureSpec& spec, double grid_h) {
    if (alpha < 2.0)
        throw std::invalid_argument("d_alpha_recursion_residual: alpha must be >= 2");
    const int n = f.n;
    LaplacePolynomial D;  // D_alpha = -(Delta_H + alpha(2n-2-alpha)/4)
    D.n = n;
    D.shifts = {0.25 * alpha * (2.0 * n - 2.0 - alpha)};
    D.sign = -1.0;
    D.leading = 1.0;
    auto value_at_r = [&](double r) {
        return potential_q_alpha(f, radial_probe(n, r), alpha, spec).value;
    };
    auto rhs_at_s = [&](double s) {
        const double r = std::acosh(std::max(1.0, s));
        if (std::abs(alpha - 2.0) < 1e-12) return f(radial_probe(n, r));
        return potential_q_alpha(f, radial_probe(n, r), alpha - 2.0, spec).value;
    };
    const ReconstructionReport rep =
        poly_pipeline(D, value_at_r, probes_r, rhs_at_s, grid_h, 0.0);
    return rep.sup_error;
}

}  // namespace horo
