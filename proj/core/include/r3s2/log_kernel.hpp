#pragma once

#include "r3s2/se3_log.hpp"

namespace r3s2 {

struct ApproxParams {
  double D33 = 1.0;
  double D44 = 1.0;
  double t = 1.0;
  double xi = 16.0;         ///< weighting of the commutator term
  double time_scale = 1.0;  ///< optional rescaling t -> c t, c >= 1

  void validate() const;
};

/// Smoothed weighted modulus of the logarithm coordinates:
/// fourth root of (|c1|^2+|c2|^2)/(xi D33 D44) + |c6|^2/D44
///              + ((c3)^2/D33 + (|c4|^2+|c5|^2)/D44)^2.
double weighted_modulus(const LieCoeffs& c, const ApproxParams& p);

/// Gaussian kernel estimate in logarithm coordinates,
/// (4 pi t^2 D33 D44)^{-2} exp(-|log g|^2 / (4t)).
double log_kernel_group(const LieCoeffs& c, const ApproxParams& p);

/// Closed-form approximation of the diffusion kernel on the quotient, using
/// the inversion-invariant section R = Rz(gamma) Ry(beta) Rz(-gamma) (which
/// makes c6 vanish). Returns 0 at the beta = pi pole.
double log_approx_kernel(const Vec3& y, const Vec3& n, const ApproxParams& p);

}  // namespace r3s2
