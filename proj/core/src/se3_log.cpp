#include "r3s2/se3_log.hpp"

#include <Eigen/Geometry>
#include <cmath>
#include <stdexcept>

namespace r3s2 {

namespace {

Eigen::Matrix3d skew(const Vec3& w) {
  Eigen::Matrix3d S;
  S << 0, -w.z(), w.y(), w.z(), 0, -w.x(), -w.y(), w.x(), 0;
  return S;
}

}  // namespace

LieCoeffs se3_log(const Vec3& x, const Eigen::Matrix3d& R) {
  const Eigen::AngleAxisd aa(R);
  const double q = aa.angle();
  if (q >= M_PI - 1e-12) {
    throw std::domain_error("se3_log: rotation angle at the pi branch cut");
  }
  const Vec3 w = q * aa.axis();
  const Eigen::Matrix3d Omega = skew(w);
  // V^{-1} = I - Omega/2 + f(q) Omega^2, f = (1 - (q/2) cot(q/2)) / q^2,
  // f -> 1/12 as q -> 0.
  double f;
  if (q < 1e-4) {
    f = 1.0 / 12.0 + q * q / 720.0;
  } else {
    f = (1.0 - 0.5 * q / std::tan(0.5 * q)) / (q * q);
  }
  const Eigen::Matrix3d Vinv =
      Eigen::Matrix3d::Identity() - 0.5 * Omega + f * Omega * Omega;
  LieCoeffs out;
  out.c.head<3>() = Vinv * x;
  out.c.tail<3>() = w;
  out.q = q;
  return out;
}

std::pair<Vec3, Eigen::Matrix3d> se3_exp(const LieCoeffs& c) {
  const Vec3 w = c.rotational();
  const double q = w.norm();
  const Eigen::Matrix3d Omega = skew(w);
  Eigen::Matrix3d R, V;
  if (q < 1e-8) {
    R = Eigen::Matrix3d::Identity() + Omega;
    V = Eigen::Matrix3d::Identity() + 0.5 * Omega;
  } else {
    R = Eigen::AngleAxisd(q, w / q).toRotationMatrix();
    V = Eigen::Matrix3d::Identity() + (1.0 - std::cos(q)) / (q * q) * Omega +
        (q - std::sin(q)) / (q * q * q) * Omega * Omega;
  }
  return {V * c.spatial(), R};
}

}  // namespace r3s2
