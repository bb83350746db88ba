#include "respole/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "respole/model.hpp"  // ValidationError

namespace respole {

BigInt factorial_exact(int n) {
    if (n < 0) throw ValidationError("factorial_exact: negative argument");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binom_exact(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt acc = 1;
    for (int j = 1; j <= k; ++j) {
        acc *= (n - k + j);
        acc /= j;  // exact at every step
    }
    return acc;
}

void GaussPoly::add_term(int degree, const GaussInt& c) {
    if (degree < 0) throw ValidationError("GaussPoly: negative degree");
    if (static_cast<int>(coeffs.size()) <= degree) coeffs.resize(static_cast<std::size_t>(degree) + 1);
    coeffs[static_cast<std::size_t>(degree)] = coeffs[static_cast<std::size_t>(degree)] + c;
}

void GaussPoly::trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

bool GaussPoly::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const GaussInt& c) { return c.is_zero(); });
}

bool GaussPoly::is_constant_one() const {
    if (coeffs.empty() || !(coeffs[0] == GaussInt{1, 0})) return false;
    return std::all_of(coeffs.begin() + 1, coeffs.end(),
                       [](const GaussInt& c) { return c.is_zero(); });
}

std::complex<double> GaussPoly::eval(std::complex<double> x) const {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + std::complex<double>(static_cast<double>(it->re), static_cast<double>(it->im));
    return acc;
}

void BivarPoly::add_term(int a, int b, const GaussInt& c) {
    if (a < 0 || b < 0) throw ValidationError("BivarPoly: negative exponent");
    if (static_cast<int>(coeff.size()) <= a) coeff.resize(static_cast<std::size_t>(a) + 1);
    auto& row = coeff[static_cast<std::size_t>(a)];
    if (static_cast<int>(row.size()) <= b) row.resize(static_cast<std::size_t>(b) + 1);
    row[static_cast<std::size_t>(b)] = row[static_cast<std::size_t>(b)] + c;
}

GaussPoly BivarPoly::identify_conjugate() const {
    GaussPoly p;
    for (std::size_t a = 0; a < coeff.size(); ++a)
        for (std::size_t b = 0; b < coeff[a].size(); ++b) {
            if (coeff[a][b].is_zero()) continue;
            GaussInt c = coeff[a][b];
            if (a % 2 == 1) c = GaussInt{-c.re, -c.im};  // (-X)^a
            p.add_term(static_cast<int>(a + b), c);
        }
    p.trim();
    return p;
}

std::complex<double> BivarPoly::eval(double u) const {
    const std::complex<double> x{0.0, u};     // X = i u
    const std::complex<double> xbar{0.0, -u};  // Xbar = -i u
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t a = 0; a < coeff.size(); ++a)
        for (std::size_t b = 0; b < coeff[a].size(); ++b) {
            if (coeff[a][b].is_zero()) continue;
            const std::complex<double> c(static_cast<double>(coeff[a][b].re),
                                         static_cast<double>(coeff[a][b].im));
            acc += c * std::pow(xbar, static_cast<double>(a)) * std::pow(x, static_cast<double>(b));
        }
    return acc;
}

bool binom_product_identity(int n, int k, int l, int m) {
    if (!(0 <= l && l <= k && k <= n && 0 <= m && m <= n - k))
        throw ValidationError("binom_product_identity: indices outside the summation lattice");
    const BigInt lhs = binom_exact(n, k) * binom_exact(k, l) * binom_exact(n - k, m);
    const BigInt rhs = binom_exact(n, m) * binom_exact(n - m, l) * binom_exact(n - m - l, k - l);
    return lhs == rhs;
}

GaussPoly binom_cancellation(int n, int m, int l) {
    if (!(0 <= m && m <= n && 0 <= l && l <= n - m))
        throw ValidationError("binom_cancellation: indices outside the summation lattice");
    GaussPoly p;
    for (int k = l; k <= n - m; ++k) {
        GaussInt c{binom_exact(n - m - l, k - l), 0};
        if ((k - l) % 2 == 1) c.re = -c.re;  // (-X)^{k-l}
        p.add_term((k - l) + (n - k - m), c);
    }
    p.trim();
    return p;
}

bool reorder_check(int n) {
    if (n < 0) throw ValidationError("reorder_check: n must be >= 0");
    std::vector<std::tuple<int, int, int>> first, second;
    for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= k; ++l)
            for (int m = 0; m <= n - k; ++m) first.emplace_back(k, l, m);
    for (int m = 0; m <= n; ++m)
        for (int l = 0; l <= n - m; ++l)
            for (int k = l; k <= n - m; ++k) second.emplace_back(k, l, m);
    std::sort(first.begin(), first.end());
    std::sort(second.begin(), second.end());
    return first == second;
}

namespace {
GaussInt divide_exact(const GaussInt& c, const BigInt& d) {
    if (c.re % d != 0 || c.im % d != 0)
        throw std::logic_error("symbolic_state_evolution: coefficient not divisible by n!");
    return {c.re / d, c.im / d};
}
}  // namespace

SymbolicEvolution symbolic_state_evolution(int n) {
    if (n < 0) throw ValidationError("symbolic_state_evolution: n must be >= 0");
    if (n > 20) throw ValidationError("symbolic_state_evolution: n > 20 exceeds the size bound");

    SymbolicEvolution ev;
    ev.n = n;
    ev.dyads.assign(static_cast<std::size_t>(n) + 1,
                    std::vector<DyadTerm>(static_cast<std::size_t>(n) + 1));

    // Jordan-normalized coefficient of the dyad (l, m):
    //   (l! m!/n!) sum_k binom(n,k) binom(k,l) binom(n-k,m) Xbar^{k-l} X^{n-k-m}
    // carried as l! m! * sum (integer) with the /n! applied after reduction.
    for (int m = 0; m <= n; ++m)
        for (int l = 0; l <= n - m; ++l) {
            auto& term = ev.dyads[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)];
            const BigInt scale = factorial_exact(l) * factorial_exact(m);
            for (int k = l; k <= n - m; ++k) {
                const BigInt c =
                    scale * binom_exact(n, k) * binom_exact(k, l) * binom_exact(n - k, m);
                term.raw.add_term(k - l, n - k - m, GaussInt{c, 0});
            }
        }

    const BigInt nfact = factorial_exact(n);
    for (auto& row : ev.dyads)
        for (auto& term : row) {
            GaussPoly reduced = term.raw.identify_conjugate();
            for (auto& c : reduced.coeffs) c = divide_exact(c, nfact);
            reduced.trim();
            term.reduced = std::move(reduced);
        }
    return ev;
}

bool SymbolicEvolution::matches_antidiagonal() const {
    for (int l = 0; l <= n; ++l)
        for (int m = 0; m <= n; ++m) {
            const auto& red = dyads[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)].reduced;
            if (l + m == n ? !red.is_constant_one() : !red.is_zero()) return false;
        }
    return true;
}

std::complex<double> SymbolicEvolution::eval_raw(int l, int m, double u) const {
    if (l < 0 || l > n || m < 0 || m > n)
        throw ValidationError("SymbolicEvolution::eval_raw: dyad index out of range");
    const double nfact = static_cast<double>(factorial_exact(n));
    return dyads[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)].raw.eval(u) / nfact;
}

}  // namespace respole
