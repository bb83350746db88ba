#include "respole/states.hpp"

#include <cmath>

namespace respole {

namespace {
constexpr cplx kI{0.0, 1.0};

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

DyadCoefficients blank(const ResonanceModel& m, BraKind kind) {
    DyadCoefficients w;
    w.c = Eigen::MatrixXcd::Zero(m.r, m.r);
    w.bra = kind;
    w.z_R = m.z_R();
    w.Gamma = m.Gamma;
    w.r = m.r;
    return w;
}

// Upper-triangular ket-evolution matrix U with U(j, k) = (-it Gamma)^{k-j}/(k-j)!
// times e^{-i z_R t}; coefficients evolve as c' = U c U^dagger.
Eigen::MatrixXcd ket_evolution(const DyadCoefficients& w, double t) {
    const int r = w.r;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(r, r);
    const cplx phase = std::exp(-kI * w.z_R * t);
    for (int j = 0; j < r; ++j)
        for (int k = j; k < r; ++k)
            u(j, k) = ipow(-kI * t * w.Gamma, k - j) / factorial(k - j) * phase;
    return u;
}
}  // namespace

Eigen::MatrixXcd DyadCoefficients::to_derivative_basis() const {
    Eigen::MatrixXcd out(r, r);
    for (int k = 0; k < r; ++k)
        for (int m = 0; m < r; ++m)
            out(k, m) = c(k, m) * std::pow(Gamma, k + m) / (factorial(k) * factorial(m));
    return out;
}

DyadCoefficients DyadCoefficients::from_derivative_basis(const ResonanceModel& m,
                                                         const Eigen::MatrixXcd& cd,
                                                         BraKind kind) {
    if (cd.rows() != m.r || cd.cols() != m.r)
        throw ValidationError("from_derivative_basis: coefficient matrix must be r x r");
    DyadCoefficients w = blank(m, kind);
    for (int k = 0; k < m.r; ++k)
        for (int j = 0; j < m.r; ++j)
            w.c(k, j) = cd(k, j) * factorial(k) * factorial(j) / std::pow(m.Gamma, k + j);
    return w;
}

DyadCoefficients state_operator(const ResonanceModel& m, int n, BraKind kind) {
    if (n < 0 || n >= m.r) throw ValidationError("state_operator: n must satisfy 0 <= n <= r-1");
    DyadCoefficients w = blank(m, kind);
    for (int k = 0; k <= n; ++k) w.c(k, n - k) = 1.0;
    return w;
}

DyadCoefficients full_state_operator(const ResonanceModel& m, BraKind kind) {
    DyadCoefficients w = blank(m, kind);
    const double sign = (kind == BraKind::DecayMinus) ? 1.0 : -1.0;
    for (int n = 0; n < m.r; ++n) {
        const cplx weight = sign * 2.0 * M_PI * m.Gamma * binom(m.r, n + 1) * ipow(-kI, n);
        for (int k = 0; k <= n; ++k) w.c(k, n - k) += weight;
    }
    return w;
}

DyadCoefficients evolve_coefficients(const DyadCoefficients& w, double t) {
    if (t < 0.0)
        throw ValidationError("evolve_coefficients: t < 0 is outside the semigroup domain");
    const Eigen::MatrixXcd u = ket_evolution(w, t);
    DyadCoefficients out = w;
    out.c = u * w.c * u.adjoint();
    return out;
}

DyadCoefficients evolve_dyad(const ResonanceModel& m, int k, int m_idx, double t) {
    if (k < 0 || k >= m.r || m_idx < 0 || m_idx >= m.r)
        throw ValidationError("evolve_dyad: dyad indices must lie in 0..r-1");
    if (t < 0.0) throw ValidationError("evolve_dyad: t < 0 is outside the semigroup domain");
    DyadCoefficients w = blank(m, BraKind::DecayMinus);
    // e^{-Gamma t} sum_{l<=k} sum_{m'<=m} (-itG)^l/l! (itG)^{m'}/m'!
    // placed on the dyad (k-l, m-m').
    const double decay = std::exp(-m.Gamma * t);
    for (int l = 0; l <= k; ++l) {
        const cplx ket_w = ipow(-kI * t * m.Gamma, l) / factorial(l);
        for (int mp = 0; mp <= m_idx; ++mp) {
            const cplx bra_w = ipow(kI * t * m.Gamma, mp) / factorial(mp);
            w.c(k - l, m_idx - mp) += decay * ket_w * bra_w;
        }
    }
    return w;
}

DyadCoefficients evolve_state_triple_sum(const ResonanceModel& model, int n, double t) {
    if (n < 0 || n >= model.r)
        throw ValidationError("evolve_state_triple_sum: n must satisfy 0 <= n <= r-1");
    if (t < 0.0)
        throw ValidationError("evolve_state_triple_sum: t < 0 is outside the semigroup domain");

    // e^{-Gamma t} Gamma^n/n! sum_m sum_l sum_{k=l..n-m}
    //   binom(n,k) binom(k,l) binom(n-k,m) (-it)^{k-l} (it)^{n-k-m}
    // on the derivative-basis dyad (l, m).
    const int r = model.r;
    Eigen::MatrixXcd cd = Eigen::MatrixXcd::Zero(r, r);
    const double prefactor = std::exp(-model.Gamma * t) * std::pow(model.Gamma, n) / factorial(n);
    for (int m = 0; m <= n; ++m)
        for (int l = 0; l <= n - m; ++l) {
            cplx acc{0.0, 0.0};
            for (int k = l; k <= n - m; ++k)
                acc += binom(n, k) * binom(k, l) * binom(n - k, m) *
                       ipow(-kI * t, k - l) * ipow(kI * t, n - k - m);
            cd(l, m) += prefactor * acc;
        }
    return DyadCoefficients::from_derivative_basis(model, cd, BraKind::DecayMinus);
}

DyadCoefficients evolve_state_closed(const ResonanceModel& m, int n, double t) {
    if (t < 0.0)
        throw ValidationError("evolve_state_closed: t < 0 is outside the semigroup domain");
    DyadCoefficients w = state_operator(m, n, BraKind::DecayMinus);
    w.c *= std::exp(-m.Gamma * t);
    return w;
}

cplx pair_with_observable(const DyadCoefficients& w, const GamowComponents& psi) {
    if (psi.norm != Normalization::Jordan)
        throw ValidationError("pair_with_observable: components must be Jordan-normalized");
    if (psi.r != w.r || psi.z_R != w.z_R)
        throw ValidationError("pair_with_observable: components and operator from different models");
    cplx acc{0.0, 0.0};
    for (int k = 0; k < w.r; ++k)
        for (int m = 0; m < w.r; ++m)
            acc += w.c(k, m) * psi.values[static_cast<std::size_t>(k)] *
                   std::conj(psi.values[static_cast<std::size_t>(m)]);
    return acc;
}

cplx scattering_probability_evolution(const ResonanceModel& m, const HardyFunction& psi,
                                      const HardyFunction& phi, double t) {
    if (m.r != 1)
        throw ValidationError(
            "scattering_probability_evolution: the delayed-registration amplitude is only "
            "defined for first-order poles (r = 1)");
    if (t < 0.0)
        throw ValidationError(
            "scattering_probability_evolution: t < 0 is outside the semigroup domain");
    return std::exp(-kI * m.z_R() * t) * pole_term(m, psi, phi).total;
}

}  // namespace respole
