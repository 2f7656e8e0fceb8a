#include "r3s2/log_kernel.hpp"

#include <Eigen/Geometry>
#include <cmath>
#include <stdexcept>

namespace r3s2 {

void ApproxParams::validate() const {
  if (!(D33 > 0.0 && D44 > 0.0 && t > 0.0 && xi > 0.0)) {
    throw std::invalid_argument("ApproxParams: D33, D44, t, xi must be positive");
  }
  if (!(time_scale >= 1.0)) {
    throw std::invalid_argument("ApproxParams: time_scale must be >= 1");
  }
}

double weighted_modulus(const LieCoeffs& c, const ApproxParams& p) {
  const double c1 = c.c(0), c2 = c.c(1), c3 = c.c(2);
  const double c4 = c.c(3), c5 = c.c(4), c6 = c.c(5);
  const double planar = (c1 * c1 + c2 * c2) / (p.xi * p.D33 * p.D44);
  const double spin = c6 * c6 / p.D44;
  const double main_term = c3 * c3 / p.D33 + (c4 * c4 + c5 * c5) / p.D44;
  return std::pow(planar + spin + main_term * main_term, 0.25);
}

double log_kernel_group(const LieCoeffs& c, const ApproxParams& p) {
  p.validate();
  const double t = p.time_scale * p.t;
  const double mod = weighted_modulus(c, p);
  const double pref = 1.0 / std::pow(4.0 * M_PI * t * t * p.D33 * p.D44, 2);
  return pref * std::exp(-mod * mod / (4.0 * t));
}

double log_approx_kernel(const Vec3& y, const Vec3& n, const ApproxParams& p) {
  p.validate();
  const double nz = std::clamp(n.z(), -1.0, 1.0);
  if (nz <= -1.0 + 1e-12) return 0.0;  // beta = pi pole of the chart
  const double beta = std::acos(nz);
  const double gamma = std::atan2(n.y(), n.x());
  const Eigen::Matrix3d R =
      (Eigen::AngleAxisd(gamma, Vec3::UnitZ()) * Eigen::AngleAxisd(beta, Vec3::UnitY()) *
       Eigen::AngleAxisd(-gamma, Vec3::UnitZ()))
          .toRotationMatrix();
  return log_kernel_group(se3_log(y, R), p);
}

}  // namespace r3s2
