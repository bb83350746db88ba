#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "respole/poly.hpp"

namespace respole {

// Thrown when a value fails a documented precondition or type invariant.
class ValidationError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an evaluation point coincides with (or is dangerously close
// to) a pole of the function being evaluated.
class PoleEvaluationError : public std::domain_error {
    using std::domain_error::domain_error;
};

// Relative proximity below which an evaluation point counts as sitting on a
// pole: |z - p| < kPoleProximity * (1 + |p|).
inline constexpr double kPoleProximity = 1e-12;

inline bool near_pole(cplx z, cplx pole) {
    return std::abs(z - pole) < kPoleProximity * (1.0 + std::abs(pole));
}

// Exact binomial coefficient in double precision (exact for n <= 56).
double binom(int n, int k);

// A single resonance of width Gamma and order r at z_R = E_R - i Gamma/2,
// with a slowly varying real background phase gamma(w) = g0 + g1 w.
// The scattering amplitude is
//     S(w) = ((w - E_R - i Gamma/2) / (w - z_R))^r * exp(2 i gamma(w)),
// one global rational-times-entire formula, unimodular on the real axis.
struct ResonanceModel {
    double E_R = 0.0;
    double Gamma = 0.0;
    int r = 1;
    // background phase polynomial coefficients, degree <= 1
    std::vector<double> gamma_coeffs;

    ResonanceModel() = default;
    ResonanceModel(double energy, double width, int order, std::vector<double> gamma = {});

    cplx z_R() const { return {E_R, -Gamma / 2.0}; }

    cplx gamma_phase(cplx w) const;
    double gamma0() const { return gamma_coeffs.empty() ? 0.0 : gamma_coeffs[0]; }
    double gamma1() const { return gamma_coeffs.size() > 1 ? gamma_coeffs[1] : 0.0; }
    bool gamma_is_constant() const { return gamma1() == 0.0; }

    // d^k/dw^k exp(2 i gamma(w)) for k = 0..kmax
    std::vector<cplx> gauge_factor_derivatives(cplx w, int kmax) const;
};

cplx smatrix_eval(const ResonanceModel& m, cplx w);

// Principal-part coefficients at z_R: a[n] multiplies (w - z_R)^{-(n+1)},
// n = 0..r-1.  Closed form: a[n] = binom(r, n+1) (-i Gamma)^{n+1}.
struct LaurentPrincipalPart {
    std::vector<cplx> a;
};

// Raw closed form, no model validation (admits the Gamma -> 0 limit).
std::vector<cplx> laurent_principal_coeffs(int r, double Gamma);
LaurentPrincipalPart laurent_principal(const ResonanceModel& m);

struct HardyPole {
    cplx position;
    int multiplicity = 1;
};

// Rational wave-function component
//     F(E) = numer(E) / prod_j (E - p_j)^{m_j}.
// With every p_j strictly in the upper half-plane, F is analytic in the
// closed lower half-plane; decay degree sum(m_j) - deg(numer) >= 2 makes
// products of two such functions integrable with a vanishing arc at
// infinity.
struct HardyFunction {
    Poly numer;
    std::vector<HardyPole> poles;

    cplx eval(cplx z) const;
    // Symbolic derivative: every multiplicity goes up by one and the
    // numerator is rebuilt by the quotient rule.  Never finite differences.
    HardyFunction derivative() const;
    int decay_degree() const;
    int pole_order_sum() const;
};

struct HardyViolation {
    enum class Kind { WrongHalfPlane, InsufficientDecay, BadMultiplicity, EmptyDenominator };
    Kind kind;
    std::string detail;
};

struct HardyReport {
    std::vector<HardyViolation> violations;
    bool valid() const { return violations.empty(); }
};

HardyReport hardy_validate(const HardyFunction& f);

// Throws ValidationError (naming `who`) unless f passes hardy_validate.
void require_valid_hardy(const HardyFunction& f, const char* who);

cplx hardy_derivative(const HardyFunction& f, cplx z, int k);
// F(z), F'(z), ..., F^(kmax)(z) in one pass
std::vector<cplx> hardy_derivatives(const HardyFunction& f, cplx z, int kmax);

}  // namespace respole
