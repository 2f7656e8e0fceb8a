#include "r3s2/wave_functions.hpp"

#include <stdexcept>

#include "r3s2/legendre.hpp"

namespace r3s2 {

SpheroidalBasis::SpheroidalBasis(int m, double rho, int lmax, bool generalized, int pad)
    : lmax_(lmax),
      es_(generalized ? gswe_eigensystem(m, rho, lmax + pad)
                      : swe_eigensystem(m, rho, lmax + pad)) {
  if (lmax < std::abs(m)) throw std::invalid_argument("SpheroidalBasis: lmax < |m|");
}

std::complex<double> SpheroidalBasis::eigenvalue(int l) const {
  if (l < std::abs(es_.m) || l > lmax_) {
    throw std::invalid_argument("SpheroidalBasis: degree out of range");
  }
  return es_.eigenvalues(l - std::abs(es_.m));
}

std::complex<double> SpheroidalBasis::eval(int l, double x) const {
  if (l < std::abs(es_.m) || l > lmax_) {
    throw std::invalid_argument("SpheroidalBasis: degree out of range");
  }
  if (std::abs(x) > 1.0) throw std::domain_error("SpheroidalBasis: |x| > 1");
  const std::vector<double> P = assoc_legendre_row(es_.m, es_.lmax, x);
  const int col = l - std::abs(es_.m);
  std::complex<double> acc{0.0, 0.0};
  for (int j = 0; j < es_.size(); ++j) acc += es_.vectors(j, col) * P[static_cast<size_t>(j)];
  return acc;
}

double spheroidal_wave(int l, int m, double rho, double x) {
  return SpheroidalBasis(m, rho, l, false).eval(l, x).real();
}

std::complex<double> gen_spheroidal_wave(int l, int m, double rho, double x) {
  return SpheroidalBasis(m, rho, l, true).eval(l, x);
}

}  // namespace r3s2
