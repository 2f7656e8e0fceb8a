#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace r3s2 {

/// Eigensystem of rho^2 M1 + Lambda (SWE, real symmetric) or of
/// i rho M2 + Lambda (GSWE, complex symmetric) for fixed order m.
/// Eigenvalues are sorted by ascending real part; conjugate pairs are
/// adjacent with Im > 0 first. Columns are unit 2-norm with the first
/// significant entry rotated real-positive.
struct SpheroidalEigensystem {
  int m = 0;
  int lmax = 0;  ///< highest degree represented, l = |m| .. lmax
  double rho = 0.0;
  Eigen::VectorXcd eigenvalues;
  Eigen::MatrixXcd vectors;  ///< coefficient vectors d^{l,m} / c^{l,m} as columns
  std::vector<bool> is_real;
  Eigen::VectorXcd gram;  ///< bi-orthogonality values c^T c (no conjugation)
  double residual = 0.0;  ///< max over pairs of ||A v - lambda v||_inf
  bool near_defective = false;  ///< min |c^T c| < 1e-8: close to a branch point

  int size() const { return static_cast<int>(eigenvalues.size()); }
};

SpheroidalEigensystem swe_eigensystem(int m, double rho, int lmax);
SpheroidalEigensystem gswe_eigensystem(int m, double rho, int lmax);

}  // namespace r3s2
