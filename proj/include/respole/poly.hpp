#pragma once

#include <complex>
#include <vector>

namespace respole {

using cplx = std::complex<double>;

// Integer power by repeated multiplication: exact for 0^0 = 1 and for phase
// factors like (-i)^n, independent of how the standard library resolves
// pow(complex, int).
inline cplx ipow(cplx base, int n) {
    cplx acc{1.0, 0.0};
    for (int i = 0; i < n; ++i) acc *= base;
    return acc;
}

// Dense univariate polynomial over complex coefficients, ascending order.
// An empty coefficient list is the zero polynomial.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(cplx value) { return Poly({value}); }

    const std::vector<cplx>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    cplx eval(cplx x) const {
        cplx acc{0.0, 0.0};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly{};
        std::vector<cplx> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<double>(i) * c_[i];
        return Poly(std::move(d));
    }

    Poly operator+(const Poly& o) const {
        std::vector<cplx> s(std::max(c_.size(), o.c_.size()), cplx{0.0, 0.0});
        for (std::size_t i = 0; i < c_.size(); ++i) s[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) s[i] += o.c_[i];
        return Poly(std::move(s));
    }

    Poly operator-(const Poly& o) const { return *this + (o * cplx{-1.0, 0.0}); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly{};
        std::vector<cplx> p(c_.size() + o.c_.size() - 1, cplx{0.0, 0.0});
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) p[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(p));
    }

    Poly operator*(cplx s) const {
        std::vector<cplx> p(c_);
        for (auto& v : p) v *= s;
        return Poly(std::move(p));
    }

    // (x - root)
    static Poly monic_linear(cplx root) { return Poly({-root, cplx{1.0, 0.0}}); }

private:
    std::vector<cplx> c_;

    // drop exact-zero leading coefficients so degree() is structural
    void trim() {
        while (!c_.empty() && c_.back() == cplx{0.0, 0.0}) c_.pop_back();
    }
};

}  // namespace respole
