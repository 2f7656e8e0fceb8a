#pragma once

#include <Eigen/Dense>
#include <vector>

#include "r3s2/coeffs.hpp"

namespace r3s2 {

/// Per-degree Wigner D-matrices for one rotation, in the same harmonic
/// convention as spherical_harmonic() (Condon-Shortley phase included).
/// rotate() maps coefficients of f to coefficients of n -> f(R^T n); each
/// degree block is unitary.
class WignerD {
 public:
  WignerD(const Eigen::Matrix3d& rotation, int lmax);

  int lmax() const { return lmax_; }

  /// Block for degree l, (2l+1) x (2l+1), row/col index m' , m in -l..l.
  const Eigen::MatrixXcd& block(int l) const { return blocks_[static_cast<size_t>(l)]; }

  SphCoeffField rotate(const SphCoeffField& coeffs) const;

 private:
  int lmax_;
  std::vector<Eigen::MatrixXcd> blocks_;
};

/// Convenience wrapper: coefficients of n -> f(R^T n).
SphCoeffField wigner_rotate(const SphCoeffField& coeffs, const Eigen::Matrix3d& rotation);

/// Throws std::invalid_argument unless R^T R = I and det R = +1 (tol 1e-12).
void require_rotation(const Eigen::Matrix3d& rotation, double tol = 1e-12);

/// ZYZ Euler angles with R = Rz(alpha) Ry(beta) Rz(gamma).
void euler_zyz(const Eigen::Matrix3d& rotation, double& alpha, double& beta, double& gamma);

/// Wigner small-d matrix element d^l_{mp,m}(beta).
double wigner_small_d(int l, int mp, int m, double beta);

}  // namespace r3s2
