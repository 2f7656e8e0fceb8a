#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

namespace r3s2 {

using Vec3 = Eigen::Vector3d;
using Complex = std::complex<double>;

/// (l,m) index with the flattening k = l^2 + l + m.
struct SHIndex {
  int l = 0;
  int m = 0;

  int flat() const { return l * l + l + m; }
  static SHIndex from_flat(int k);
  static int count(int lmax) { return (lmax + 1) * (lmax + 1); }
};

/// Condon-Shortley factor used in the harmonic convention:
/// eps_m = (-1)^m for m >= 0, 1 for m < 0.
inline double eps_m(int m) { return (m >= 0 && (m & 1)) ? -1.0 : 1.0; }

/// Y^{l,m}(beta,gamma) = eps_m/sqrt(2 pi) * P(l,m,cos beta) * exp(i m gamma),
/// orthonormal w.r.t. the surface measure on S^2.
Complex spherical_harmonic(int l, int m, double beta, double gamma);

/// Same, with the direction given as a unit vector.
Complex spherical_harmonic(int l, int m, const Vec3& n);

/// All Y^{l,m}(n) for l <= lmax, flat (l,m) ordering.
std::vector<Complex> sh_basis_row(int lmax, const Vec3& n);

/// Polar/azimuth of a unit vector: beta = acos(n_z), gamma = atan2(n_y, n_x).
void to_angles(const Vec3& n, double& beta, double& gamma);

}  // namespace r3s2
