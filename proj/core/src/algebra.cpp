#include "majorana/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace majorana {
namespace {

const Complex I{0.0, 1.0};

Mat4c assemble(const Mat2c& a, const Mat2c& b, const Mat2c& c, const Mat2c& d) {
    Mat4c m;
    m.block<2, 2>(0, 0) = a;
    m.block<2, 2>(0, 2) = b;
    m.block<2, 2>(2, 0) = c;
    m.block<2, 2>(2, 2) = d;
    return m;
}

Mat2c zero2() { return Mat2c::Zero(); }

// Minkowski metric diag(+,-,-,-) on index pairs.
double eta(int mu, int nu) {
    if (mu != nu) return 0.0;
    return mu == 0 ? 1.0 : -1.0;
}

// Charge-conjugation matrix: psi_c = C conj(psi) with C = i gamma^2 in the
// standard representation; C is real and symmetric with C^2 = 1.
const Mat4& conjugation_matrix() {
    static const Mat4 C = [] {
        Mat4 m;
        m << 0, 0, 0, 1,
             0, 0, -1, 0,
             0, -1, 0, 0,
             1, 0, 0, 0;
        return m;
    }();
    return C;
}

}  // namespace

Mat2c pauli(int i) {
    Mat2c s;
    switch (i) {
        case 0: s << 1, 0, 0, 1; break;
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, -I, I, 0; break;
        case 3: s << 1, 0, 0, -1; break;
        default: throw std::invalid_argument("pauli: index must be 0..3");
    }
    return s;
}

GammaRep make_gamma(const std::string& name) {
    GammaRep rep;
    rep.name = name;
    const Mat2c s0 = pauli(0), s1 = pauli(1), s2 = pauli(2), s3 = pauli(3);
    if (name == "dirac") {
        rep.gamma[0] = assemble(s0, zero2(), zero2(), -s0);
        for (int k = 1; k <= 3; ++k) {
            const Mat2c sk = pauli(k);
            rep.gamma[static_cast<std::size_t>(k)] =
                assemble(zero2(), sk, -sk, zero2());
        }
    } else if (name == "majorana-paper") {
        rep.gamma[0] = assemble(zero2(), s2, s2, zero2());
        rep.gamma[1] = assemble(-I * s0, zero2(), zero2(), I * s0);
        rep.gamma[2] = assemble(zero2(), I * s1, I * s1, zero2());
        rep.gamma[3] = assemble(zero2(), -I * s3, -I * s3, zero2());
    } else if (name == "majorana-alt") {
        rep.gamma[0] = assemble(zero2(), I * s0, -I * s0, zero2());
        rep.gamma[1] = assemble(zero2(), -I * s3, -I * s3, zero2());
        rep.gamma[2] = assemble(-I * s0, zero2(), zero2(), I * s0);
        rep.gamma[3] = assemble(zero2(), I * s1, I * s1, zero2());
    } else {
        throw std::invalid_argument("make_gamma: unknown representation '" + name +
                                    "' (expected dirac, majorana-paper or majorana-alt)");
    }
    rep.gamma[4] = I * rep.gamma[0] * rep.gamma[1] * rep.gamma[2] * rep.gamma[3];
    return rep;
}

double clifford_residual(const GammaRep& rep) {
    double worst = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = mu; nu < 4; ++nu) {
            const Mat4c anti = rep.g(mu) * rep.g(nu) + rep.g(nu) * rep.g(mu) -
                               2.0 * eta(mu, nu) * Mat4c::Identity();
            worst = std::max(worst, anti.cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

ComplexBispinor charge_conjugate(const ComplexBispinor& psi) {
    return conjugation_matrix() * psi.conjugate();
}

std::pair<ComplexBispinor, ComplexBispinor> cc_split(const ComplexBispinor& psi) {
    const ComplexBispinor psi_c = charge_conjugate(psi);
    return {0.5 * (psi + psi_c), 0.5 * (psi - psi_c)};
}

TwoSpinor majorana_to_two_spinor(const ComplexBispinor& psi) {
    const double residual = (charge_conjugate(psi) - psi).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, psi.cwiseAbs().maxCoeff());
    if (residual > 1e-12 * scale) {
        throw ConstraintError("majorana_to_two_spinor: bispinor is not self-conjugate",
                              residual);
    }
    return psi.head<2>();
}

ComplexBispinor two_spinor_to_majorana(const TwoSpinor& xi) {
    // Lower block -i sigma_2 xi^* written out: (-xi_2^*, xi_1^*).
    ComplexBispinor psi;
    psi(0) = xi(0);
    psi(1) = xi(1);
    psi(2) = -std::conj(xi(1));
    psi(3) = std::conj(xi(0));
    return psi;
}

Vec4 two_spinor_to_real(const TwoSpinor& xi) {
    const double r = std::sqrt(2.0);
    Vec4 Xi;
    Xi << r * xi(0).real(), r * xi(1).real(), r * xi(0).imag(), r * xi(1).imag();
    return Xi;
}

TwoSpinor real_to_two_spinor(const Vec4& Xi) {
    const double r = 1.0 / std::sqrt(2.0);
    TwoSpinor xi;
    xi(0) = r * Complex(Xi(0), Xi(2));
    xi(1) = r * Complex(Xi(1), Xi(3));
    return xi;
}

Mat4c two_spinor_matrix() {
    const double r = 1.0 / std::sqrt(2.0);
    const Mat2c s0 = pauli(0), s2 = pauli(2);
    return r * assemble(s0, I * s0, -I * s2, -s2);
}

TwoSpinor two_spinor_rhs(const TwoSpinor& xi, const std::array<TwoSpinor, 3>& dxi,
                         double m) {
    TwoSpinor acc = TwoSpinor::Zero();
    for (int i = 1; i <= 3; ++i) {
        acc += pauli(i) * pauli(2) * dxi[static_cast<std::size_t>(i - 1)].conjugate();
    }
    return I * acc - I * m * xi;
}

Mat4c spin_matrix(const GammaRep& rep, int j) {
    if (j < 1 || j > 3) throw std::invalid_argument("spin_matrix: j must be 1..3");
    Mat4c s = Mat4c::Zero();
    for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 3; ++l) {
            // Levi-Civita symbol: (j-k)(k-l)(l-j)/2 on {1,2,3}.
            const int eps = (j - k) * (k - l) * (l - j) / 2;
            if (eps == 0) continue;
            s += (I / 8.0) * static_cast<double>(eps) *
                 (rep.g(k) * rep.g(l) - rep.g(l) * rep.g(k));
        }
    }
    return s;
}

Mat4 RealRep::momentum_contraction(const Momentum3& p) const {
    return p(0) * G[1] + p(1) * G[2] + p(2) * G[3];
}

RealRep RealRep::from(const GammaRep& rep) {
    RealRep real_rep;
    for (std::size_t i = 0; i < 5; ++i) {
        const Mat4c ig = I * rep.gamma[i];
        const double residual = ig.imag().cwiseAbs().maxCoeff();
        if (residual > 1e-12) {
            throw ConstraintError(
                "RealRep::from: representation '" + rep.name + "' is not purely imaginary",
                residual);
        }
        real_rep.G[i] = ig.real();
    }
    return real_rep;
}

const RealRep& RealRep::paper() {
    static const RealRep rep = RealRep::from(make_gamma("majorana-paper"));
    return rep;
}

const RealRep& RealRep::alt() {
    static const RealRep rep = RealRep::from(make_gamma("majorana-alt"));
    return rep;
}

Mat4 chiral_rotation(double phi, const RealRep& rep) {
    return std::cos(phi) * Mat4::Identity() + std::sin(phi) * rep.g5();
}

Mat4 spinor_rotation(const Vec3& axis, double theta, const RealRep& rep) {
    // gamma^j gamma^k = (-i G_j)(-i G_k) = -G_j G_k is real.
    const Mat4 g23 = -rep.g(2) * rep.g(3);
    const Mat4 g31 = -rep.g(3) * rep.g(1);
    const Mat4 g12 = -rep.g(1) * rep.g(2);
    const Mat4 generator = axis(0) * g23 + axis(1) * g31 + axis(2) * g12;
    return std::cos(0.5 * theta) * Mat4::Identity() + std::sin(0.5 * theta) * generator;
}

Mat4 spinor_boost(const Vec3& axis, double eta_rapidity, const RealRep& rep) {
    Mat4 generator = Mat4::Zero();
    for (int k = 1; k <= 3; ++k) {
        generator += axis(k - 1) * (-rep.g(0) * rep.g(k));
    }
    return std::cosh(0.5 * eta_rapidity) * Mat4::Identity() +
           std::sinh(0.5 * eta_rapidity) * generator;
}

}  // namespace majorana
