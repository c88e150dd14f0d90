#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace majorana {

using Complex = std::complex<double>;

using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat8 = Eigen::Matrix<double, 8, 8>;

using Vec2c = Eigen::Vector2cd;
using Vec4c = Eigen::Vector4cd;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;

inline constexpr double pi = 3.14159265358979323846;

// A bispinor over the real field, the natural state vector once a purely
// imaginary representation of the gamma matrices is in force.
using RealBispinor = Vec4;
// A bispinor over the complex field (generic representation).
using ComplexBispinor = Vec4c;
// A two-component complex spinor.
using TwoSpinor = Vec2c;
// A spatial momentum; for one-dimensional problems only the first component
// is used.
using Momentum3 = Vec3;
// A contravariant four-vector with index 0 the time component.
using FourVector = Vec4;
// A Lorentz transformation acting on four-vectors.
using LorentzTransform = Mat4;
// The real 4x4 bispinor representative S(L) of a Lorentz transformation.
using SpinorTransform = Mat4;
// An operator restricted to the eight-dimensional real span of one +p/-p
// axial plane-wave pair.  Basis order: the four components riding the +p
// exponential first, then the four riding the -p exponential.
using PairOperator = Mat8;

// An input violated a mathematical precondition (a constraint that the
// operation needs in order to be well defined).
class ConstraintError : public std::domain_error {
public:
    ConstraintError(const std::string& message, double residual)
        : std::domain_error(message), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_ = 0.0;
};

// The helicity construction has no canonical limit at zero momentum.
class DegenerateMomentumError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Two fields living on different grids were combined.
class GridMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A requested time step violates the explicit-integrator stability bound.
class StabilityError : public std::invalid_argument {
public:
    StabilityError(const std::string& message, double suggested_dt)
        : std::invalid_argument(message), suggested_dt_(suggested_dt) {}

    double suggested_dt() const noexcept { return suggested_dt_; }

private:
    double suggested_dt_ = 0.0;
};

}  // namespace majorana
