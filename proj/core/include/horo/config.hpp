#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace horo {

/// Tolerances for the exact-algebra invariants (group identities, sheet
/// membership, factorization residuals).  Defaults are what the library is
/// tested against; callers may relax or tighten them.
struct NumericsConfig {
    double group_identity_tol = 1e-10;  // |g^T J g - J|_inf
    double reassembly_tol     = 1e-9;   // |n_v a_t k - g|_inf
    double on_sheet_tol       = 1e-12;  // |[x,x] - 1|
    double rotation_tol       = 1e-10;  // |k^T k - I|_inf, |det k - 1|
};

enum class QuadScheme {
    AdaptiveSimpson,
    GaussLegendreComposite,
    TanhSinh,
};

/// Controls for every numerical integral in the library.
struct QuadratureSpec {
    double rel_tolerance = 1e-8;
    double abs_tolerance = 1e-10;
    /// Half-width of the flat integration box (0 = derive from field decay).
    double truncation_radius = 0.0;
    long max_evals = 2000000;
    QuadScheme scheme = QuadScheme::GaussLegendreComposite;

    void validate() const {
        if (!(rel_tolerance > 0.0) || !(abs_tolerance > 0.0))
            throw std::invalid_argument("QuadratureSpec: tolerances must be positive");
        if (max_evals < 100)
            throw std::invalid_argument("QuadratureSpec: max_evals must be >= 100");
    }

    QuadratureSpec with_tol(double rel, double abs) const {
        QuadratureSpec q = *this;
        q.rel_tolerance = rel;
        q.abs_tolerance = abs;
        return q;
    }
};

/// Value plus an a-posteriori error estimate.  `converged` is false when the
/// evaluation budget ran out before the requested tolerance was met; the
/// value is then the best available estimate (an accuracy warning, not an
/// error).
struct Estimate {
    double value = 0.0;
    double abs_error = 0.0;
    bool converged = true;
    long evaluations = 0;
};

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DecompositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an extrapolation-based reconstruction produces a
/// non-converging sequence; carries the diagnostic table in what().
struct ReconstructionUnstable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace horo
