#include "r3s2/spherical_harmonics.hpp"

#include <cmath>
#include <stdexcept>

#include "r3s2/legendre.hpp"

namespace r3s2 {

namespace {
constexpr double kInvSqrt2Pi = 0.3989422804014327;
}

SHIndex SHIndex::from_flat(int k) {
  const int l = static_cast<int>(std::floor(std::sqrt(static_cast<double>(k))));
  return {l, k - l * l - l};
}

void to_angles(const Vec3& n, double& beta, double& gamma) {
  beta = std::acos(std::clamp(n.z(), -1.0, 1.0));
  gamma = std::atan2(n.y(), n.x());
}

Complex spherical_harmonic(int l, int m, double beta, double gamma) {
  if (std::abs(m) > l) throw std::domain_error("spherical_harmonic: |m| > l");
  const double p = assoc_legendre(l, m, std::cos(beta));
  const double a = eps_m(m) * kInvSqrt2Pi * p;
  return Complex{a * std::cos(m * gamma), a * std::sin(m * gamma)};
}

Complex spherical_harmonic(int l, int m, const Vec3& n) {
  double beta, gamma;
  to_angles(n, beta, gamma);
  return spherical_harmonic(l, m, beta, gamma);
}

std::vector<Complex> sh_basis_row(int lmax, const Vec3& n) {
  double beta, gamma;
  to_angles(n, beta, gamma);
  const double x = std::cos(beta);
  std::vector<Complex> out(SHIndex::count(lmax));
  for (int m = -lmax; m <= lmax; ++m) {
    const auto plm = assoc_legendre_row(m, lmax, x);
    const Complex phase{std::cos(m * gamma), std::sin(m * gamma)};
    const Complex f = eps_m(m) * kInvSqrt2Pi * phase;
    for (int l = std::abs(m); l <= lmax; ++l) {
      out[SHIndex{l, m}.flat()] = f * plm[l - std::abs(m)];
    }
  }
  return out;
}

}  // namespace r3s2
