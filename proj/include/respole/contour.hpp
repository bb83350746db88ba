#pragma once

#include <functional>
#include <vector>

#include "respole/jordan.hpp"
#include "respole/model.hpp"

namespace respole {

enum class QuadScheme { Adaptive, FixedTrapezoid };

struct QuadratureSpec {
    // Radius of Cauchy circles around z_R; 0 selects half the minimum of
    // |Im z_R| and the distance from z_R to the nearest wave-function pole.
    double circle_radius = 0.0;
    // Starting panel count for circle trapezoid rules.
    int panels = 32;
    // Real-axis truncation; 0 selects the smallest value whose analytic
    // tail bound is below tol/10.
    double e_max = 0.0;
    QuadScheme scheme = QuadScheme::Adaptive;
    // Convergence target (panel-doubling defect / adaptive refinement).
    double tol = 1e-12;
};

struct CauchyResult {
    cplx value{0.0, 0.0};
    double error_estimate = 0.0;  // panel-doubling disagreement
    bool converged = false;
    int panels_used = 0;
};

// (n!/2 pi i) * integral of g(w)/(w-z0)^{n+1} over the circle |w-z0| = radius,
// by the trapezoid rule (spectrally accurate for analytic g).  Counter-
// clockwise orientation, so the result approximates g^{(n)}(z0).
CauchyResult cauchy_derivative(const std::function<cplx(cplx)>& g, cplx z0, int n,
                               const QuadratureSpec& q);

// Principal-part coefficients a_{-n-1}, n = 0..r-1, of a function with one
// pole of order <= r at z0, extracted by circle quadrature.  The default
// radius here is Gamma = -2 Im z0 since the model amplitude has no other
// singularity.
std::vector<cplx> cauchy_residue_coeffs(const std::function<cplx(cplx)>& s, cplx z0, int r,
                                        const QuadratureSpec& q);

struct PoleTermResult {
    cplx total{0.0, 0.0};
    std::vector<cplx> per_order;  // the n-indexed summands, n = 0..r-1
    bool gauge_included = true;   // e^{2i gamma} absorbed into the derivatives
};

// The resonance-pole contribution to the amplitude (psi, phi):
//   sum_n (-2 pi i/n!) a_{-n-1} d^n/dw^n [psi(w) e^{2i gamma(w)} phi(w)]
// at w = z_R, all derivatives symbolic.
PoleTermResult pole_term(const ResonanceModel& m, const HardyFunction& psi,
                         const HardyFunction& phi);

struct IntegralResult {
    cplx value{0.0, 0.0};
    double error_estimate = 0.0;  // quadrature error + tail bound
    double tail_bound = 0.0;
    double e_max = 0.0;
};

// integral over [0, +inf) of psi(E) S(E) phi(E) dE, truncated at e_max with
// an analytic tail bound from the decay degrees.  Constant gamma only.
IntegralResult direct_integral(const ResonanceModel& m, const HardyFunction& psi,
                               const HardyFunction& phi, const QuadratureSpec& q);

// integral over [0, -inf) (negative real axis, same global formula).
IntegralResult background_integral(const ResonanceModel& m, const HardyFunction& psi,
                                   const HardyFunction& phi, const QuadratureSpec& q);

struct IdentityReport {
    cplx direct{0.0, 0.0};
    cplx background{0.0, 0.0};
    cplx pole_total{0.0, 0.0};
    double defect = 0.0;      // |direct - (background + pole_total)|
    double rel_defect = 0.0;  // defect / (1 + |direct|)
    double tol = 0.0;
    bool pass = false;
    IntegralResult direct_detail;
    IntegralResult background_detail;
};

// Checks the contour-deformation identity
//   direct = background + pole term
// to defect <= tol * (1 + |direct|).  This pins the clockwise orientation
// of the pole circle: any sign error shows up as an O(1) defect.
IdentityReport contour_identity_check(const ResonanceModel& m, const HardyFunction& psi,
                                      const HardyFunction& phi, const QuadratureSpec& q,
                                      double tol);

// <psi|z_R^gamma>^(k) = d^k/dz^k [psi(z) e^{2i gamma(z)}] at z_R,
// k = 0..r-1, derivative normalization.
GamowComponents gamow_components(const ResonanceModel& m, const HardyFunction& psi);

// Coefficients b_k of the pole part of the basis expansion of phi:
//   b_k = (-2 pi Gamma) sum_{n=k}^{r-1} binom(r, n+1) (-i)^n jb[n-k]
// with jb[l] = Gamma^l/l! phi^{(l)}(z_R) (Jordan-normalized bra values,
// no gauge factor on the phi side).
std::vector<cplx> expansion_coefficients(const ResonanceModel& m, const HardyFunction& phi);

// sum_k <psi|z_R^gamma>>^(k) b_k; must reproduce pole_term().total.
cplx pole_term_from_expansion(const ResonanceModel& m, const HardyFunction& psi,
                              const HardyFunction& phi);

// Half the minimum of |Im z_R| and the distance from z_R to any pole of the
// given wave functions.
double default_circle_radius(const ResonanceModel& m,
                             const std::vector<const HardyFunction*>& funcs);

}  // namespace respole
