#pragma once

#include <complex>

#include "r3s2/eigensystem.hpp"

namespace r3s2 {

/// Spheroidal wave functions synthesized from the matrix eigenproblems as
/// series in the orthonormal associated Legendre functions. The basis object
/// caches the eigensystem for a fixed (m, rho); the free functions are
/// one-shot conveniences.
class SpheroidalBasis {
 public:
  /// Solves the SWE (generalized=false) or GSWE (generalized=true)
  /// eigenproblem with `pad` extra internal degrees beyond lmax so that
  /// truncation error in the synthesized functions stays negligible.
  SpheroidalBasis(int m, double rho, int lmax, bool generalized, int pad = 8);

  int m() const { return es_.m; }
  int lmax() const { return lmax_; }
  double rho() const { return es_.rho; }
  const SpheroidalEigensystem& eigensystem() const { return es_; }

  /// Eigenvalue lambda-tilde for the mode indexed by l = |m| .. lmax.
  std::complex<double> eigenvalue(int l) const;

  /// S^{l,m}_rho(x) or GS^{l,m}_rho(x), |x| <= 1.
  std::complex<double> eval(int l, double x) const;

 private:
  int lmax_;
  SpheroidalEigensystem es_;
};

double spheroidal_wave(int l, int m, double rho, double x);
std::complex<double> gen_spheroidal_wave(int l, int m, double rho, double x);

}  // namespace r3s2
