#include "respole/jordan.hpp"

#include <cmath>
#include <cstdint>

namespace respole {

namespace {
constexpr cplx kI{0.0, 1.0};

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void check_model_sized(const std::vector<cplx>& v, int r, const char* who) {
    if (static_cast<int>(v.size()) != r)
        throw ValidationError(std::string(who) + ": expected exactly r values");
}
}  // namespace

GamowComponents GamowComponents::to(Normalization target) const {
    if (static_cast<int>(values.size()) != r)
        throw ValidationError("GamowComponents: value count does not match r");
    GamowComponents out = *this;
    out.norm = target;
    if (target == norm) return out;
    const double root = std::sqrt(2.0 * M_PI * Gamma);
    for (int k = 0; k < r; ++k) {
        const double jordan_scale = std::pow(Gamma, k) / factorial(k);
        const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
        cplx jordan_value;
        switch (norm) {
            case Normalization::Derivative: jordan_value = values[k] * jordan_scale; break;
            case Normalization::Jordan: jordan_value = values[k]; break;
            case Normalization::PsiG: jordan_value = values[k] / (sign * root); break;
        }
        switch (target) {
            case Normalization::Derivative: out.values[k] = jordan_value / jordan_scale; break;
            case Normalization::Jordan: out.values[k] = jordan_value; break;
            case Normalization::PsiG: out.values[k] = jordan_value * sign * root; break;
        }
    }
    return out;
}

JordanOperator hamiltonian_block(const ResonanceModel& m) {
    JordanOperator op;
    op.z_R = m.z_R();
    op.Gamma = m.Gamma;
    op.r = m.r;
    op.entries = Eigen::MatrixXcd::Zero(m.r, m.r);
    for (int i = 0; i < m.r; ++i) {
        op.entries(i, i) = m.z_R();
        if (i > 0) op.entries(i, i - 1) = m.Gamma;
    }
    return op;
}

bool nilpotency_check(const ResonanceModel& m, int k) {
    if (k < 0 || k >= m.r) throw ValidationError("nilpotency_check: k must satisfy 0 <= k < r");
    const int r = m.r;

    // Floating-point route on the ket action.
    const Eigen::MatrixXcd nil =
        hamiltonian_block(m).ket_action() - m.z_R() * Eigen::MatrixXcd::Identity(r, r);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(r);
    v(k) = 1.0;
    for (int j = 0; j < k; ++j) v = nil * v;  // (H - z_R)^k e_k
    const bool nonzero_at_k = v.norm() > 0.0;
    v = nil * v;  // (H - z_R)^{k+1} e_k
    const bool zero_at_k1 = (v.array() == cplx{0.0, 0.0}).all();

    // Integer route: with Gamma factored out, (H - z_R) is the index shift
    // e_k -> e_{k-1}; k+1 shifts annihilate e_k, k shifts leave e_0.
    std::vector<std::int64_t> w(static_cast<std::size_t>(r), 0);
    w[static_cast<std::size_t>(k)] = 1;
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i + 1 < r; ++i) w[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i) + 1];
        w[static_cast<std::size_t>(r) - 1] = 0;
    }
    const bool exact_nonzero = w[0] == 1;
    bool exact_zero = true;
    for (int i = 0; i + 1 < r; ++i) w[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i) + 1];
    w[static_cast<std::size_t>(r) - 1] = 0;
    for (auto x : w) exact_zero = exact_zero && x == 0;

    return nonzero_at_k && zero_at_k1 && exact_nonzero && exact_zero;
}

JordanOperator lagrange_sylvester(const ResonanceModel& m, const std::vector<cplx>& f_derivatives) {
    check_model_sized(f_derivatives, m.r, "lagrange_sylvester");
    JordanOperator op;
    op.z_R = m.z_R();
    op.Gamma = m.Gamma;
    op.r = m.r;
    op.entries = Eigen::MatrixXcd::Zero(m.r, m.r);
    for (int v = 0; v < m.r; ++v) {
        const cplx value = std::pow(m.Gamma, v) / factorial(v) * f_derivatives[static_cast<std::size_t>(v)];
        for (int i = v; i < m.r; ++i) op.entries(i, i - v) = value;
    }
    return op;
}

JordanOperator evolution_matrix(const ResonanceModel& m, double t) {
    if (t < 0.0)
        throw ValidationError("evolution_matrix: t < 0 is outside the semigroup domain");
    std::vector<cplx> f(static_cast<std::size_t>(m.r));
    const cplx base = std::exp(-kI * m.z_R() * t);
    cplx pow{1.0, 0.0};
    for (int v = 0; v < m.r; ++v) {
        f[static_cast<std::size_t>(v)] = pow * base;  // (-it)^v e^{-i z_R t}
        pow *= -kI * t;
    }
    return lagrange_sylvester(m, f);
}

JordanOperator matrix_exp_oracle(const ResonanceModel& m, double t) {
    if (t < 0.0)
        throw ValidationError("matrix_exp_oracle: t < 0 is outside the semigroup domain");
    const int r = m.r;
    Eigen::MatrixXcd a = -kI * t * hamiltonian_block(m).entries;

    // Scale until the norm is small, Taylor-sum, square back up.
    int squarings = 0;
    double norm = a.cwiseAbs().maxCoeff() * r;
    while (norm > 0.5 && squarings < 64) {
        a *= 0.5;
        norm *= 0.5;
        ++squarings;
    }
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Identity(r, r);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(r, r);
    for (int n = 1; n <= 40; ++n) {
        term = (term * a) / static_cast<double>(n);
        sum += term;
        if (term.cwiseAbs().maxCoeff() < 1e-300) break;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;

    JordanOperator op;
    op.z_R = m.z_R();
    op.Gamma = m.Gamma;
    op.r = r;
    op.entries = std::move(sum);
    return op;
}

GamowComponents evolve_components(const GamowComponents& comps, double t) {
    if (t < 0.0)
        throw ValidationError("evolve_components: t < 0 is outside the semigroup domain");
    if (static_cast<int>(comps.values.size()) != comps.r)
        throw ValidationError("evolve_components: value count does not match r");

    // Mixing weights in the native normalization:
    //   jordan      (-it Gamma)^v / v!
    //   derivative  binom(k, v) (-it)^v
    //   psiG        (+it Gamma)^v / v!   (the alternating signs commute through)
    const auto weight = [&](int k, int v) -> cplx {
        switch (comps.norm) {
            case Normalization::Jordan:
                return ipow(-kI * t * comps.Gamma, v) / factorial(v);
            case Normalization::Derivative:
                return binom(k, v) * ipow(-kI * t, v);
            case Normalization::PsiG:
                return ipow(kI * t * comps.Gamma, v) / factorial(v);
        }
        return {};
    };

    const cplx phase = std::exp(-kI * comps.z_R * t);
    GamowComponents out = comps;
    for (int k = 0; k < comps.r; ++k) {
        cplx acc{0.0, 0.0};
        for (int v = 0; v <= k; ++v)
            acc += weight(k, v) * comps.values[static_cast<std::size_t>(k - v)];
        out.values[static_cast<std::size_t>(k)] = phase * acc;
    }
    return out;
}

}  // namespace respole
