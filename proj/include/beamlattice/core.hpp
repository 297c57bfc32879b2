#ifndef BEAMLATTICE_CORE_HPP
#define BEAMLATTICE_CORE_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace beamlattice {

using cplx = std::complex<double>;

template <typename Real>
using Vec2 = Eigen::Matrix<Real, 2, 1>;
template <typename Real>
using Mat2 = Eigen::Matrix<Real, 2, 2>;
template <typename Real>
using Vec3c = Eigen::Matrix<std::complex<Real>, 3, 1>;
template <typename Real>
using Mat3c = Eigen::Matrix<std::complex<Real>, 3, 3>;

using Vector2 = Vec2<double>;
using Matrix2 = Mat2<double>;
using Vector3c = Vec3c<double>;
using Matrix3c = Mat3c<double>;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad size, bad tag, out-of-range mode).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Loads whose zero-mode force component is outside the image of the
/// zero-mode stiffness block.
class CompatibilityError : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be invertible (or have a known kernel) is not.
class SingularError : public Error {
 public:
  using Error::Error;
};

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Counterclockwise rotation by pi/2.
template <typename Real>
Vec2<Real> perp(const Vec2<Real>& l) {
  return Vec2<Real>(-l.y(), l.x());
}

}  // namespace beamlattice

#endif  // BEAMLATTICE_CORE_HPP
