#pragma once

#include <Eigen/Core>
#include <vector>

#include "respole/model.hpp"

namespace respole {

// Conventions for the r numbers attached to a wave function psi at z_R:
//   Derivative : plain k-th derivatives of <psi|z> e^{2i gamma(z)} at z_R
//   Jordan     : Gamma^k/k! times the derivative value (standard Jordan
//                vectors; all components share one physical dimension)
//   PsiG       : (-1)^{k+1} sqrt(2 pi Gamma) times the Jordan value
// The Jordan component with index k is NOT the k-th derivative of the
// Jordan component with index 0; conversions must stay explicit.
enum class Normalization { Derivative, Jordan, PsiG };

struct GamowComponents {
    std::vector<cplx> values;  // index k = 0..r-1
    Normalization norm = Normalization::Derivative;
    cplx z_R{0.0, 0.0};
    double Gamma = 0.0;
    int r = 0;

    GamowComponents to(Normalization target) const;
};

// An operator restricted to the r-dimensional resonance subspace, stored as
// the matrix that acts on columns of Jordan-normalized components:
//   (entries * c)[k] = <psi| Op |z>>^(k).
// This is the lower-triangular form with Gamma on the subdiagonal for the
// Hamiltonian.  The same operator acts on basis kets e_k ~ |z>>^(k) through
// the transpose, ket_action().
struct JordanOperator {
    Eigen::MatrixXcd entries;
    cplx z_R{0.0, 0.0};
    double Gamma = 0.0;
    int r = 0;

    Eigen::MatrixXcd ket_action() const { return entries.transpose(); }
};

// H restricted to the subspace: z_R on the diagonal, Gamma on the first
// subdiagonal.
JordanOperator hamiltonian_block(const ResonanceModel& m);

// True iff (H - z_R)^{k+1} e_k = 0 with (H - z_R)^k e_k != 0, i.e. the
// basis ket of order k is a generalized eigenvector of degree exactly k+1.
// The zero entries are structural, so the check is exact in floating point;
// an integer shift-matrix calculation backs it independently.
bool nilpotency_check(const ResonanceModel& m, int k);

// f(H) on the subspace from the r values f(z_R), f'(z_R), ..,
// f^{(r-1)}(z_R): lower-triangular Toeplitz with Gamma^v/v! f^{(v)}(z_R) on
// subdiagonal v.
JordanOperator lagrange_sylvester(const ResonanceModel& m, const std::vector<cplx>& f_derivatives);

// exp(-iHt) on the subspace, t >= 0 only (semigroup domain):
// subdiagonal v carries (-it Gamma)^v / v! * exp(-i z_R t).
JordanOperator evolution_matrix(const ResonanceModel& m, double t);

// Independent route to exp(-iHt): scaling-and-squaring Taylor series on the
// explicit Hamiltonian block.
JordanOperator matrix_exp_oracle(const ResonanceModel& m, double t);

// Applies the t >= 0 evolution in the components' own normalization.
GamowComponents evolve_components(const GamowComponents& comps, double t);

}  // namespace respole
