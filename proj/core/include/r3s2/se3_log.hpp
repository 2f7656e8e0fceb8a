#pragma once

#include <Eigen/Dense>
#include <utility>

#include "r3s2/spherical_harmonics.hpp"

namespace r3s2 {

/// Logarithm coordinates of a rigid motion: spatial (c1,c2,c3) and rotational
/// (c4,c5,c6), with q the rotation-angle magnitude |(c4,c5,c6)|.
struct LieCoeffs {
  Eigen::Matrix<double, 6, 1> c = Eigen::Matrix<double, 6, 1>::Zero();
  double q = 0.0;

  Vec3 spatial() const { return c.head<3>(); }
  Vec3 rotational() const { return c.tail<3>(); }
};

/// Principal-branch SE(3) logarithm; throws std::domain_error when the
/// rotation angle reaches pi.
LieCoeffs se3_log(const Vec3& x, const Eigen::Matrix3d& R);

/// Inverse map (group exponential), for round-trip checks.
std::pair<Vec3, Eigen::Matrix3d> se3_exp(const LieCoeffs& c);

}  // namespace r3s2
