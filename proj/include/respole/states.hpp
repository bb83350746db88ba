#pragma once

#include <Eigen/Core>

#include "respole/contour.hpp"
#include "respole/jordan.hpp"

namespace respole {

// Which bra family the dyads pair with.  The scattering bra pairs with
// prepared states (analytic pairing); the decay bra pairs with registered
// observables and is defined algebraically as the conjugate of the ket
// component.  Coefficients are identical, downstream pairing rules differ.
enum class BraKind { ScatteringPlus, DecayMinus };

// Coefficients over the dyad basis |z>>^(k) <<^(m)| in Jordan normalization:
// c(k, m) multiplies the dyad with ket order k and bra order m.
struct DyadCoefficients {
    Eigen::MatrixXcd c;
    BraKind bra = BraKind::DecayMinus;
    cplx z_R{0.0, 0.0};
    double Gamma = 0.0;
    int r = 0;

    // Same operator over the derivative-normalized dyads; round-trips
    // exactly against from_derivative_basis.
    Eigen::MatrixXcd to_derivative_basis() const;
    static DyadCoefficients from_derivative_basis(const ResonanceModel& m,
                                                  const Eigen::MatrixXcd& cd, BraKind kind);
};

// W^(n): ones on the antidiagonal k + m = n, zero elsewhere; the
// non-reducible mixture of dyads of total order n.
DyadCoefficients state_operator(const ResonanceModel& m, int n, BraKind kind);

// W = 2 pi Gamma sum_n binom(r, n+1) (-i)^n W^(n) for the decay side; the
// scattering-side pole-term operator carries the opposite overall sign.
DyadCoefficients full_state_operator(const ResonanceModel& m, BraKind kind);

// Bilinear semigroup evolution of an arbitrary coefficient matrix:
// ket side mixes down with (-it Gamma)^l / l!, bra side with the conjugate
// weights, overall factor e^{-Gamma t}.
DyadCoefficients evolve_coefficients(const DyadCoefficients& w, double t);

// Evolution of the single dyad |z>>^(k) <<^(m)|.
DyadCoefficients evolve_dyad(const ResonanceModel& m, int k, int m_idx, double t);

// The triple-sum route: binomial mixing on both sides in the derivative
// basis, summed in the reordered (m, l, k) order, converted back to the
// Jordan basis.  Kept deliberately literal; the closed form must match it.
DyadCoefficients evolve_state_triple_sum(const ResonanceModel& m, int n, double t);

// The closed form e^{-Gamma t} W^(n).
DyadCoefficients evolve_state_closed(const ResonanceModel& m, int n, double t);

// <psi| W |psi> = sum_{k,m} c(k,m) psi_k conj(psi_m) with Jordan-normalized
// components; the decay-side bra value is the conjugate of the ket value.
cplx pair_with_observable(const DyadCoefficients& w, const GamowComponents& psi);

// First-order scattering amplitude at delayed registration time t:
//   e^{-i z_R t} (psi, phi)_pole.  Only defined for r = 1.
cplx scattering_probability_evolution(const ResonanceModel& m, const HardyFunction& psi,
                                      const HardyFunction& phi, double t);

}  // namespace respole
