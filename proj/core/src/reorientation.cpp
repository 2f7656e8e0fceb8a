#include "r3s2/reorientation.hpp"

#include <Eigen/Geometry>
#include <cmath>

namespace r3s2 {

namespace {

Eigen::Matrix3d pole_fallback(double z_sign) {
  if (z_sign >= 0.0) return Eigen::Matrix3d::Identity();
  Eigen::Matrix3d R;  // rotation by pi about e_x
  R << 1, 0, 0, 0, -1, 0, 0, 0, -1;
  return R;
}

}  // namespace

Eigen::Matrix3d frequency_frame(const Vec3& omega) {
  const double r = omega.norm();
  if (r == 0.0) return Eigen::Matrix3d::Identity();
  const Vec3 cross = omega.cross(Vec3::UnitZ());
  const double cn = cross.norm();
  if (cn < 1e-14 * r) return pole_fallback(omega.z());
  Eigen::Matrix3d R;
  R.col(0) = cross.cross(omega).normalized();
  R.col(1) = cross / cn;
  R.col(2) = omega / r;
  return R;
}

Eigen::Matrix3d section_rotation(const Vec3& n) {
  const double c = std::clamp(n.z(), -1.0, 1.0);
  const Vec3 axis = Vec3::UnitZ().cross(n);
  const double an = axis.norm();
  if (an < 1e-14) return pole_fallback(c);
  return Eigen::AngleAxisd(std::acos(c), axis / an).toRotationMatrix();
}

}  // namespace r3s2
