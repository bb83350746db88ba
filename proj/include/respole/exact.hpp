#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <vector>

namespace respole {

using BigInt = boost::multiprecision::cpp_int;

BigInt binom_exact(int n, int k);
BigInt factorial_exact(int n);

struct GaussInt {
    BigInt re{0};
    BigInt im{0};

    bool is_zero() const { return re == 0 && im == 0; }
    GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
    GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
    GaussInt operator*(const GaussInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }
};

// Polynomial in the formal variable X = (it Gamma), Gaussian-integer
// coefficients, exact arithmetic only.
struct GaussPoly {
    std::vector<GaussInt> coeffs;  // ascending

    void add_term(int degree, const GaussInt& c);
    void trim();
    bool is_zero() const;
    bool is_constant_one() const;
    std::complex<double> eval(std::complex<double> x) const;
};

// Bivariate polynomial in Xbar = (-it Gamma) and X = (it Gamma), kept as two
// distinct formal symbols until identified as conjugates.
struct BivarPoly {
    // coeff[a][b] multiplies Xbar^a X^b
    std::vector<std::vector<GaussInt>> coeff;

    void add_term(int a, int b, const GaussInt& c);
    // substitute Xbar = -X
    GaussPoly identify_conjugate() const;
    // numeric value at Xbar = -i u, X = i u with u = t Gamma
    std::complex<double> eval(double u) const;
};

// Exact check of the rearrangement identity
//   binom(n,k) binom(k,l) binom(n-k,m)
//     = binom(n,m) binom(n-m,l) binom(n-m-l,k-l)
// for 0 <= l <= k <= n, 0 <= m <= n-k.
bool binom_product_identity(int n, int k, int l, int m);

// The formal sum over k of binom(n-m-l, k-l) (-X)^{k-l} X^{n-k-m}: the zero
// polynomial unless l = n-m, where it collapses to the constant 1.
GaussPoly binom_cancellation(int n, int m, int l);

// Multiset equality of the summation lattice {0<=k<=n, 0<=l<=k, 0<=m<=n-k}
// with its reordered form {0<=m<=n, 0<=l<=n-m, l<=k<=n-m}.
bool reorder_check(int n);

struct DyadTerm {
    BivarPoly raw;      // l! m! times the inner triple-sum (pre-identification)
    GaussPoly reduced;  // raw with Xbar = -X, divided exactly by n!
    bool decay_factor = true;  // an overall e^{-Gamma t} accompanies every term
};

// Full symbolic evolution of the order-n state operator over Gaussian-integer
// polynomials.  The exponential-decay statement holds iff the reduced
// polynomial is the constant 1 on the antidiagonal l+m = n and zero
// elsewhere.
struct SymbolicEvolution {
    int n = 0;
    std::vector<std::vector<DyadTerm>> dyads;  // indexed [l][m], 0..n each

    bool matches_antidiagonal() const;
    // Jordan-normalized numeric coefficient (without the decay factor) of the
    // dyad (l, m) at u = t Gamma, evaluated from the pre-identification form.
    std::complex<double> eval_raw(int l, int m, double u) const;
};

// Bounded at n <= 20: the term count grows cubically and the displayed cases
// stop far earlier.
SymbolicEvolution symbolic_state_evolution(int n);

}  // namespace respole
