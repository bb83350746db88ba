#include "respole/contour.hpp"

#include <algorithm>
#include <cmath>

namespace respole {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * M_PI;

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// ---- circle trapezoid rules -------------------------------------------

cplx circle_moment(const std::function<cplx(cplx)>& g, cplx z0, double rho, int n, int panels) {
    // (n!/2 pi i) \oint g(w) (w - z0)^{-n-1} dw  with w = z0 + rho e^{i t}:
    // n!/(N rho^n) sum_j g(w_j) e^{-i n t_j}
    cplx acc{0.0, 0.0};
    for (int j = 0; j < panels; ++j) {
        const double theta = kTwoPi * j / panels;
        const cplx w = z0 + rho * std::exp(kI * theta);
        acc += g(w) * std::exp(-kI * static_cast<double>(n) * theta);
    }
    return acc * factorial(n) / (static_cast<double>(panels) * std::pow(rho, n));
}

// ---- Gauss-Kronrod 7/15 ------------------------------------------------

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

cplx gk15(const std::function<cplx(cplx)>& f, double a, double b, double* err) {
    const double hl = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const cplx fc = f(cplx{mid, 0.0});
    cplx kron = kWgk[7] * fc;
    cplx gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = hl * kXgk[j];
        const cplx fsum = f(cplx{mid - dx, 0.0}) + f(cplx{mid + dx, 0.0});
        kron += kWgk[j] * fsum;
        if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
    }
    if (err) *err = std::abs(kron - gauss) * hl;
    return kron * hl;
}

cplx adapt_gk(const std::function<cplx(cplx)>& f, double a, double b, double tol, int depth,
              double* err_acc) {
    double err = 0.0;
    const cplx v = gk15(f, a, b, &err);
    if (err <= tol || depth >= 60 || (b - a) <= 1e-15 * (std::abs(a) + std::abs(b))) {
        *err_acc += err;
        return v;
    }
    const double m = 0.5 * (a + b);
    return adapt_gk(f, a, m, 0.5 * tol, depth + 1, err_acc) +
           adapt_gk(f, m, b, 0.5 * tol, depth + 1, err_acc);
}

// Breakpoints for [a, b]: resonance-peak neighborhood plus a geometric fill
// so no panel spans wildly different scales.
std::vector<double> axis_breakpoints(double a, double b, double e_r, double gamma) {
    std::vector<double> pts{a, b};
    for (double p : {e_r - 8.0 * gamma, e_r + 8.0 * gamma})
        if (p > a && p < b) pts.push_back(p);
    const double scale = std::max(1.0, 4.0 * gamma);
    for (double x = scale; x < std::max(std::abs(a), std::abs(b)); x *= 4.0) {
        if (x > a && x < b) pts.push_back(x);
        if (-x > a && -x < b) pts.push_back(-x);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

struct TailBound {
    double e0 = 1.0;      // validity threshold of the bound
    double coeff = 0.0;   // |f(E)| <= coeff |E|^{-decay} for |E| >= e0
    int decay = 0;
};

double hardy_tail_coefficient(const HardyFunction& f) {
    double num = 0.0;
    for (const auto& c : f.numer.coeffs()) num += std::abs(c);
    return std::ldexp(num, f.pole_order_sum());  // 2^{sum m_j} * sum |numer|
}

TailBound integrand_tail_bound(const ResonanceModel& m, const HardyFunction& psi,
                               const HardyFunction& phi) {
    TailBound tb;
    double pole_reach = 0.0;
    for (const auto* f : {&psi, &phi})
        for (const auto& p : f->poles) pole_reach = std::max(pole_reach, std::abs(p.position));
    tb.e0 = std::max({1.0, 2.0 * pole_reach, 2.0 * std::abs(m.z_R())});
    tb.decay = psi.decay_degree() + phi.decay_degree();
    const double s_bound = std::pow(1.0 + 2.0 * m.Gamma / tb.e0, m.r);
    tb.coeff = hardy_tail_coefficient(psi) * hardy_tail_coefficient(phi) * s_bound;
    return tb;
}

double tail_integral_bound(const TailBound& tb, double x) {
    return tb.coeff * std::pow(x, 1 - tb.decay) / (tb.decay - 1);
}

IntegralResult axis_integral(const ResonanceModel& m, const HardyFunction& psi,
                             const HardyFunction& phi, const QuadratureSpec& q, bool negative_axis) {
    require_valid_hardy(psi, "axis integral");
    require_valid_hardy(phi, "axis integral");
    if (!m.gamma_is_constant())
        throw ValidationError(
            "axis integral: a non-constant background phase grows on the closing arc; "
            "only constant gamma is supported");

    const TailBound tb = integrand_tail_bound(m, psi, phi);
    if (tb.decay < 2) throw ValidationError("axis integral: total decay degree < 2");

    double e_max = q.e_max;
    if (e_max <= 0.0) {
        // smallest truncation whose tail bound sits below tol/10
        const double target = std::max(q.tol / 10.0, 1e-300);
        e_max = std::pow(tb.coeff / ((tb.decay - 1) * target), 1.0 / (tb.decay - 1));
        e_max = std::min(std::max(e_max, 4.0 * tb.e0), 1e12);
    }

    const auto f = [&](cplx e) { return psi.eval(e) * smatrix_eval(m, e) * phi.eval(e); };
    const double a = negative_axis ? -e_max : 0.0;
    const double b = negative_axis ? 0.0 : e_max;

    IntegralResult res;
    res.e_max = e_max;
    res.tail_bound = tail_integral_bound(tb, e_max);

    if (q.scheme == QuadScheme::FixedTrapezoid) {
        const int n = std::max(2, q.panels);
        const double h = (b - a) / n;
        cplx acc = 0.5 * (f(cplx{a, 0.0}) + f(cplx{b, 0.0}));
        for (int j = 1; j < n; ++j) acc += f(cplx{a + j * h, 0.0});
        res.value = acc * h;
        res.error_estimate = res.tail_bound;  // no refinement estimate
    } else {
        const auto pts = axis_breakpoints(a, b, m.E_R, m.Gamma);
        cplx coarse{0.0, 0.0};
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) coarse += gk15(f, pts[i], pts[i + 1], nullptr);
        const double abs_tol =
            std::max(q.tol * (1.0 + std::abs(coarse)) / static_cast<double>(pts.size()), 1e-300);
        double err_acc = 0.0;
        cplx total{0.0, 0.0};
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            total += adapt_gk(f, pts[i], pts[i + 1], abs_tol, 0, &err_acc);
        res.value = total;
        res.error_estimate = err_acc + res.tail_bound;
    }
    if (negative_axis) res.value = -res.value;  // orientation 0 -> -inf
    return res;
}

// n-th derivative values at z_R of psi(z) e^{2i gamma(z)} for n = 0..kmax
std::vector<cplx> gauged_derivatives(const ResonanceModel& m, const HardyFunction& psi, int kmax) {
    const cplx zr = m.z_R();
    const auto fd = hardy_derivatives(psi, zr, kmax);
    const auto gd = m.gauge_factor_derivatives(zr, kmax);
    std::vector<cplx> out(static_cast<std::size_t>(kmax) + 1, cplx{0.0, 0.0});
    for (int n = 0; n <= kmax; ++n) {
        cplx acc{0.0, 0.0};
        for (int j = 0; j <= n; ++j)
            acc += binom(n, j) * fd[static_cast<std::size_t>(j)] * gd[static_cast<std::size_t>(n - j)];
        out[static_cast<std::size_t>(n)] = acc;
    }
    return out;
}

}  // namespace

CauchyResult cauchy_derivative(const std::function<cplx(cplx)>& g, cplx z0, int n,
                               const QuadratureSpec& q) {
    if (n < 0) throw ValidationError("cauchy_derivative: negative order");
    const double rho = q.circle_radius > 0.0 ? q.circle_radius : 0.5 * std::abs(z0.imag());
    if (!(rho > 0.0)) throw ValidationError("cauchy_derivative: circle radius must be positive");

    CauchyResult res;
    int panels = std::max(8, q.panels);
    cplx prev = circle_moment(g, z0, rho, n, panels);
    for (int iter = 0; iter < 14; ++iter) {
        panels *= 2;
        const cplx cur = circle_moment(g, z0, rho, n, panels);
        res.value = cur;
        res.error_estimate = std::abs(cur - prev);
        res.panels_used = panels;
        if (res.error_estimate <= q.tol * (1.0 + std::abs(cur))) {
            res.converged = true;
            return res;
        }
        if (q.scheme == QuadScheme::FixedTrapezoid) return res;
        prev = cur;
    }
    return res;  // converged stays false; caller sees the achieved estimate
}

std::vector<cplx> cauchy_residue_coeffs(const std::function<cplx(cplx)>& s, cplx z0, int r,
                                        const QuadratureSpec& q) {
    if (r < 1) throw ValidationError("cauchy_residue_coeffs: r must be >= 1");
    const double rho = q.circle_radius > 0.0 ? q.circle_radius : -2.0 * z0.imag();
    if (!(rho > 0.0)) throw ValidationError("cauchy_residue_coeffs: circle radius must be positive");

    // a_{-n-1} = (1/2 pi i) \oint s(w) (w-z0)^n dw
    //          = rho^{n+1}/N sum_j s(w_j) e^{i (n+1) t_j}
    const auto pass = [&](int panels) {
        std::vector<cplx> a(static_cast<std::size_t>(r), cplx{0.0, 0.0});
        for (int j = 0; j < panels; ++j) {
            const double theta = kTwoPi * j / panels;
            const cplx w = z0 + rho * std::exp(kI * theta);
            const cplx sv = s(w);
            for (int n = 0; n < r; ++n)
                a[static_cast<std::size_t>(n)] +=
                    sv * std::exp(kI * static_cast<double>(n + 1) * theta);
        }
        for (int n = 0; n < r; ++n)
            a[static_cast<std::size_t>(n)] *= std::pow(rho, n + 1) / static_cast<double>(panels);
        return a;
    };

    int panels = std::max(16, q.panels);
    auto prev = pass(panels);
    for (int iter = 0; iter < 14; ++iter) {
        panels *= 2;
        auto cur = pass(panels);
        double defect = 0.0;
        for (int n = 0; n < r; ++n)
            defect = std::max(defect, std::abs(cur[static_cast<std::size_t>(n)] -
                                               prev[static_cast<std::size_t>(n)]));
        if (defect <= q.tol) return cur;
        prev = std::move(cur);
    }
    return prev;
}

PoleTermResult pole_term(const ResonanceModel& m, const HardyFunction& psi,
                         const HardyFunction& phi) {
    require_valid_hardy(psi, "pole_term");
    require_valid_hardy(phi, "pole_term");
    const cplx zr = m.z_R();
    const auto psi_g = gauged_derivatives(m, psi, m.r - 1);
    const auto phi_d = hardy_derivatives(phi, zr, m.r - 1);
    const auto a = laurent_principal_coeffs(m.r, m.Gamma);

    PoleTermResult res;
    res.per_order.resize(static_cast<std::size_t>(m.r));
    for (int n = 0; n < m.r; ++n) {
        cplx dn{0.0, 0.0};  // d^n/dw^n [psi(w) e^{2i gamma} phi(w)] at z_R
        for (int k = 0; k <= n; ++k)
            dn += binom(n, k) * psi_g[static_cast<std::size_t>(k)] *
                  phi_d[static_cast<std::size_t>(n - k)];
        res.per_order[static_cast<std::size_t>(n)] =
            (-kTwoPi * kI / factorial(n)) * a[static_cast<std::size_t>(n)] * dn;
        res.total += res.per_order[static_cast<std::size_t>(n)];
    }
    return res;
}

IntegralResult direct_integral(const ResonanceModel& m, const HardyFunction& psi,
                               const HardyFunction& phi, const QuadratureSpec& q) {
    return axis_integral(m, psi, phi, q, false);
}

IntegralResult background_integral(const ResonanceModel& m, const HardyFunction& psi,
                                   const HardyFunction& phi, const QuadratureSpec& q) {
    return axis_integral(m, psi, phi, q, true);
}

IdentityReport contour_identity_check(const ResonanceModel& m, const HardyFunction& psi,
                                      const HardyFunction& phi, const QuadratureSpec& q,
                                      double tol) {
    IdentityReport rep;
    rep.direct_detail = direct_integral(m, psi, phi, q);
    rep.background_detail = background_integral(m, psi, phi, q);
    const PoleTermResult pt = pole_term(m, psi, phi);
    rep.direct = rep.direct_detail.value;
    rep.background = rep.background_detail.value;
    rep.pole_total = pt.total;
    rep.defect = std::abs(rep.direct - (rep.background + rep.pole_total));
    rep.rel_defect = rep.defect / (1.0 + std::abs(rep.direct));
    rep.tol = tol;
    rep.pass = rep.defect <= tol * (1.0 + std::abs(rep.direct));
    return rep;
}

GamowComponents gamow_components(const ResonanceModel& m, const HardyFunction& psi) {
    require_valid_hardy(psi, "gamow_components");
    GamowComponents c;
    c.values = gauged_derivatives(m, psi, m.r - 1);
    c.norm = Normalization::Derivative;
    c.z_R = m.z_R();
    c.Gamma = m.Gamma;
    c.r = m.r;
    return c;
}

std::vector<cplx> expansion_coefficients(const ResonanceModel& m, const HardyFunction& phi) {
    require_valid_hardy(phi, "expansion_coefficients");
    const auto phi_d = hardy_derivatives(phi, m.z_R(), m.r - 1);
    std::vector<cplx> jb(static_cast<std::size_t>(m.r));
    for (int l = 0; l < m.r; ++l)
        jb[static_cast<std::size_t>(l)] =
            std::pow(m.Gamma, l) / factorial(l) * phi_d[static_cast<std::size_t>(l)];

    std::vector<cplx> b(static_cast<std::size_t>(m.r), cplx{0.0, 0.0});
    for (int k = 0; k < m.r; ++k) {
        cplx acc{0.0, 0.0};
        for (int n = k; n < m.r; ++n)
            acc += binom(m.r, n + 1) * ipow(-kI, n) * jb[static_cast<std::size_t>(n - k)];
        b[static_cast<std::size_t>(k)] = -kTwoPi * m.Gamma * acc;
    }
    return b;
}

cplx pole_term_from_expansion(const ResonanceModel& m, const HardyFunction& psi,
                              const HardyFunction& phi) {
    const GamowComponents psi_j = gamow_components(m, psi).to(Normalization::Jordan);
    const auto b = expansion_coefficients(m, phi);
    cplx acc{0.0, 0.0};
    for (int k = 0; k < m.r; ++k)
        acc += psi_j.values[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)];
    return acc;
}

double default_circle_radius(const ResonanceModel& m,
                             const std::vector<const HardyFunction*>& funcs) {
    double dist = std::abs(m.z_R().imag());
    for (const auto* f : funcs)
        for (const auto& p : f->poles) dist = std::min(dist, std::abs(p.position - m.z_R()));
    return 0.5 * dist;
}

}  // namespace respole
