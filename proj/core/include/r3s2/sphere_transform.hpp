#pragma once

#include <Eigen/Dense>

#include "r3s2/coeffs.hpp"
#include "r3s2/sampling.hpp"

namespace r3s2 {

/// Discrete spherical-harmonic analysis/synthesis on a fixed sampling.
/// Analysis is weighted least squares, so band-limited functions round-trip
/// exactly (up to conditioning) even on non-product grids.
class SphereTransform {
 public:
  SphereTransform(const OrientationSampling& sampling, int lmax);

  int lmax() const { return lmax_; }
  const OrientationSampling& sampling() const { return sampling_; }

  SphCoeffField forward(const Eigen::VectorXcd& samples) const;
  SphCoeffField forward_real(const Eigen::VectorXd& samples) const;
  Eigen::VectorXcd inverse(const SphCoeffField& coeffs) const;

  /// Synthesis at arbitrary directions, independent of the sampling.
  static Eigen::VectorXcd synthesize(const SphCoeffField& coeffs,
                                     const std::vector<Vec3>& directions);

 private:
  OrientationSampling sampling_;
  int lmax_;
  Eigen::MatrixXcd basis_;                               // n_dirs x n_coeff
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> solver_;  // of sqrt(w) * basis
  Eigen::VectorXd sqrt_w_;
};

}  // namespace r3s2
