#ifndef NEARCLOAK_TYPES_HPP
#define NEARCLOAK_TYPES_HPP

#include <complex>
#include <Eigen/Dense>

namespace nearcloak {

using Complex = std::complex<double>;
using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.5772156649015329;
inline constexpr Complex kImag{0.0, 1.0};

} // namespace nearcloak

#endif
