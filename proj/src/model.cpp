#include "respole/model.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace respole {

namespace {
constexpr cplx kI{0.0, 1.0};

const double* binom_row(int n) {
    static constexpr int kMax = 64;
    static const auto table = [] {
        std::array<std::array<double, kMax + 1>, kMax + 1> t{};
        for (int i = 0; i <= kMax; ++i) {
            t[i][0] = 1.0;
            for (int j = 1; j <= i; ++j)
                t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0.0);
        }
        return t;
    }();
    if (n < 0 || n > kMax) throw ValidationError("binom: n out of table range");
    return table[static_cast<std::size_t>(n)].data();
}
}  // namespace

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    return binom_row(n)[k];
}

ResonanceModel::ResonanceModel(double energy, double width, int order, std::vector<double> gamma)
    : E_R(energy), Gamma(width), r(order), gamma_coeffs(std::move(gamma)) {
    if (!(Gamma > 0.0)) throw ValidationError("ResonanceModel: width Gamma must be positive");
    if (r < 1) throw ValidationError("ResonanceModel: pole order r must be >= 1");
    if (gamma_coeffs.size() > 2)
        throw ValidationError("ResonanceModel: background phase restricted to degree <= 1");
    for (double g : gamma_coeffs)
        if (!std::isfinite(g)) throw ValidationError("ResonanceModel: non-finite gamma coefficient");
    if (!std::isfinite(E_R) || !std::isfinite(Gamma))
        throw ValidationError("ResonanceModel: non-finite parameter");
}

cplx ResonanceModel::gamma_phase(cplx w) const {
    cplx acc{0.0, 0.0};
    for (auto it = gamma_coeffs.rbegin(); it != gamma_coeffs.rend(); ++it) acc = acc * w + *it;
    return acc;
}

std::vector<cplx> ResonanceModel::gauge_factor_derivatives(cplx w, int kmax) const {
    // exp(2 i gamma(w)) with gamma linear: the k-th derivative is
    // (2 i g1)^k times the function itself.
    std::vector<cplx> out(static_cast<std::size_t>(kmax) + 1);
    const cplx base = std::exp(2.0 * kI * gamma_phase(w));
    const cplx factor = 2.0 * kI * gamma1();
    cplx pow{1.0, 0.0};
    for (int k = 0; k <= kmax; ++k) {
        out[static_cast<std::size_t>(k)] = pow * base;
        pow *= factor;
    }
    return out;
}

cplx smatrix_eval(const ResonanceModel& m, cplx w) {
    const cplx zr = m.z_R();
    if (near_pole(w, zr)) throw PoleEvaluationError("smatrix_eval: w at the resonance pole");
    const cplx ratio = (w - std::conj(zr)) / (w - zr);
    return ipow(ratio, m.r) * std::exp(2.0 * kI * m.gamma_phase(w));
}

std::vector<cplx> laurent_principal_coeffs(int r, double Gamma) {
    if (r < 1) throw ValidationError("laurent_principal_coeffs: r must be >= 1");
    std::vector<cplx> a(static_cast<std::size_t>(r));
    const cplx base = -kI * Gamma;
    cplx pow = base;
    for (int n = 0; n < r; ++n) {
        a[static_cast<std::size_t>(n)] = binom(r, n + 1) * pow;
        pow *= base;
    }
    return a;
}

LaurentPrincipalPart laurent_principal(const ResonanceModel& m) {
    return LaurentPrincipalPart{laurent_principal_coeffs(m.r, m.Gamma)};
}

cplx HardyFunction::eval(cplx z) const {
    cplx denom{1.0, 0.0};
    for (const auto& p : poles) {
        if (near_pole(z, p.position))
            throw PoleEvaluationError("HardyFunction::eval: z at a stored pole");
        cplx d = z - p.position;
        for (int j = 0; j < p.multiplicity; ++j) denom *= d;
    }
    return numer.eval(z) / denom;
}

HardyFunction HardyFunction::derivative() const {
    // F = N / prod (E-p_j)^{m_j}.  Multiply numerator and denominator by
    // Q = prod (E-p_j) once:
    //   F' = (N' Q - N sum_j m_j Q/(E-p_j)) / (prod (E-p_j)^{m_j+1})
    Poly q = Poly::constant({1.0, 0.0});
    for (const auto& p : poles) q = q * Poly::monic_linear(p.position);

    Poly correction;  // sum_j m_j * Q/(E-p_j)
    for (std::size_t j = 0; j < poles.size(); ++j) {
        Poly qj = Poly::constant({1.0, 0.0});
        for (std::size_t i = 0; i < poles.size(); ++i)
            if (i != j) qj = qj * Poly::monic_linear(poles[i].position);
        correction = correction + qj * cplx{static_cast<double>(poles[j].multiplicity), 0.0};
    }

    HardyFunction d;
    d.numer = numer.derivative() * q - numer * correction;
    d.poles = poles;
    for (auto& p : d.poles) p.multiplicity += 1;
    return d;
}

int HardyFunction::pole_order_sum() const {
    int s = 0;
    for (const auto& p : poles) s += p.multiplicity;
    return s;
}

int HardyFunction::decay_degree() const { return pole_order_sum() - numer.degree(); }

HardyReport hardy_validate(const HardyFunction& f) {
    HardyReport rep;
    if (f.poles.empty())
        rep.violations.push_back({HardyViolation::Kind::EmptyDenominator,
                                  "no poles: the function cannot decay at infinity"});
    for (const auto& p : f.poles) {
        if (!(p.position.imag() > 0.0)) {
            std::ostringstream os;
            os << "pole at (" << p.position.real() << ", " << p.position.imag()
               << ") not strictly in the upper half-plane";
            rep.violations.push_back({HardyViolation::Kind::WrongHalfPlane, os.str()});
        }
        if (p.multiplicity < 1)
            rep.violations.push_back(
                {HardyViolation::Kind::BadMultiplicity, "pole multiplicity must be >= 1"});
    }
    if (f.decay_degree() < 2) {
        std::ostringstream os;
        os << "decay degree " << f.decay_degree() << " < 2";
        rep.violations.push_back({HardyViolation::Kind::InsufficientDecay, os.str()});
    }
    return rep;
}

void require_valid_hardy(const HardyFunction& f, const char* who) {
    const HardyReport rep = hardy_validate(f);
    if (rep.valid()) return;
    std::string msg = std::string(who) + ": invalid wave function:";
    for (const auto& v : rep.violations) msg += " [" + v.detail + "]";
    throw ValidationError(msg);
}

cplx hardy_derivative(const HardyFunction& f, cplx z, int k) {
    if (k < 0) throw ValidationError("hardy_derivative: negative order");
    HardyFunction cur = f;
    for (int j = 0; j < k; ++j) cur = cur.derivative();
    return cur.eval(z);
}

std::vector<cplx> hardy_derivatives(const HardyFunction& f, cplx z, int kmax) {
    if (kmax < 0) throw ValidationError("hardy_derivatives: negative order");
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(kmax) + 1);
    HardyFunction cur = f;
    out.push_back(cur.eval(z));
    for (int j = 1; j <= kmax; ++j) {
        cur = cur.derivative();
        out.push_back(cur.eval(z));
    }
    return out;
}

}  // namespace respole
