#pragma once

#include "majorana/types.hpp"

#include <array>
#include <string>
#include <utility>

namespace majorana {

// Pauli matrices; pauli(0) is the 2x2 identity.
Mat2c pauli(int i);

// One named set of gamma matrices gamma^0..gamma^3 plus gamma_5, stored over
// the complex field so that every representation fits the same container.
struct GammaRep {
    std::string name;
    std::array<Mat4c, 5> gamma{};  // gamma[0..3] = gamma^mu, gamma[4] = gamma_5

    const Mat4c& g(int mu) const { return gamma[static_cast<std::size_t>(mu)]; }
    const Mat4c& g5() const { return gamma[4]; }
};

// Builds one of the supported representations:
//   "dirac"          - standard representation, diagonal gamma^0
//   "majorana-paper" - purely imaginary set with gamma^0 = offdiag(sigma_2)
//   "majorana-alt"   - purely imaginary set with gamma^2 diagonal
// gamma_5 is always the product i gamma^0 gamma^1 gamma^2 gamma^3.
GammaRep make_gamma(const std::string& name);

// Largest entry of gamma^mu gamma^nu + gamma^nu gamma^mu - 2 eta^{mu nu} over
// all index pairs, plus the deviation of gamma_5 from i g0 g1 g2 g3.  Zero
// for a valid representation.
double clifford_residual(const GammaRep& rep);

// Charge conjugation in the standard representation: psi_c = i gamma^2 psi^*.
ComplexBispinor charge_conjugate(const ComplexBispinor& psi);

// Splits psi into its conjugation-even and conjugation-odd parts,
// psi = psi_plus + psi_minus with (psi_plus)_c = psi_plus and
// (psi_minus)_c = -psi_minus.
std::pair<ComplexBispinor, ComplexBispinor> cc_split(const ComplexBispinor& psi);

// Extracts the upper two-spinor of a self-conjugate bispinor in the standard
// representation.  Throws ConstraintError if psi_c != psi beyond 1e-12
// relative to the vector norm.
TwoSpinor majorana_to_two_spinor(const ComplexBispinor& psi);

// Rebuilds the self-conjugate bispinor (xi, -i sigma_2 xi^*).
ComplexBispinor two_spinor_to_majorana(const TwoSpinor& xi);

// Splits xi = (xi' + i xi'') / sqrt(2) into the real four-vector
// (xi'_1, xi'_2, xi''_1, xi''_2).
Vec4 two_spinor_to_real(const TwoSpinor& xi);

// Inverse of two_spinor_to_real.
TwoSpinor real_to_two_spinor(const Vec4& Xi);

// The constant unitary U with psi = U (xi', xi'') for self-conjugate psi:
// U = 2^{-1/2} [[sigma_0, i sigma_0], [-i sigma_2, -sigma_2]].
Mat4c two_spinor_matrix();

// Time derivative of the two-spinor evolution equation
//   i d_t xi + sigma_i sigma_2 d_i xi^* - m xi = 0,
// given xi and its three spatial derivatives dxi[i] = d_i xi.
TwoSpinor two_spinor_rhs(const TwoSpinor& xi, const std::array<TwoSpinor, 3>& dxi,
                         double m);

// Spin matrix S^j = (i/8) eps_{jkl} [gamma^k, gamma^l] for j in 1..3.
Mat4c spin_matrix(const GammaRep& rep, int j);

// Real matrices G_mu = i gamma^mu (and G5 = i gamma_5) of a purely imaginary
// representation.  In terms of these the Hamiltonian, the axial exponential
// and every bispinor transformation used by the higher modules are real.
struct RealRep {
    std::array<Mat4, 5> G{};  // G[0..3] = i gamma^mu, G[4] = i gamma_5

    const Mat4& g(int mu) const { return G[static_cast<std::size_t>(mu)]; }
    const Mat4& g5() const { return G[4]; }

    // i gamma^k p_k contracted over the three spatial directions.
    Mat4 momentum_contraction(const Momentum3& p) const;

    // Fails with ConstraintError if the representation is not purely
    // imaginary to 1e-12.
    static RealRep from(const GammaRep& rep);

    // Cached real forms of the two purely imaginary representations.
    static const RealRep& paper();
    static const RealRep& alt();
};

// Real form of exp(i gamma_5 phi) = cos(phi) I + sin(phi) i gamma_5.
Mat4 chiral_rotation(double phi, const RealRep& rep = RealRep::paper());

// Bispinor representative of a spatial rotation by theta about the unit axis
// n: S = cos(theta/2) I + sin(theta/2) (n^1 G_23 + n^2 G_31 + n^3 G_12) with
// G_jk the (real) matrix of gamma^j gamma^k.  Orthogonal.
Mat4 spinor_rotation(const Vec3& axis, double theta,
                     const RealRep& rep = RealRep::paper());

// Bispinor representative of a boost with rapidity eta along the unit axis
// n: S = cosh(eta/2) I + sinh(eta/2) n^k G_0k with G_0k the (real) matrix of
// gamma^0 gamma^k.  Symmetric with inverse S(-eta).
Mat4 spinor_boost(const Vec3& axis, double eta,
                  const RealRep& rep = RealRep::paper());

}  // namespace majorana
