#include "r3s2/wigner.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace r3s2 {

void require_rotation(const Eigen::Matrix3d& rotation, double tol) {
  const double ortho = (rotation.transpose() * rotation - Eigen::Matrix3d::Identity())
                           .cwiseAbs()
                           .maxCoeff();
  if (ortho > tol || std::abs(rotation.determinant() - 1.0) > tol) {
    throw std::invalid_argument("require_rotation: matrix is not a rotation");
  }
}

void euler_zyz(const Eigen::Matrix3d& R, double& alpha, double& beta, double& gamma) {
  const double cb = std::clamp(R(2, 2), -1.0, 1.0);
  beta = std::acos(cb);
  if (std::abs(cb) > 1.0 - 1e-14) {
    // sin(beta) ~ 0: only alpha +/- gamma is determined; put it all in alpha.
    gamma = 0.0;
    if (cb > 0.0) {
      beta = 0.0;
      alpha = std::atan2(R(1, 0), R(0, 0));
    } else {
      beta = M_PI;
      alpha = std::atan2(-R(1, 0), -R(0, 0));
    }
    return;
  }
  alpha = std::atan2(R(1, 2), R(0, 2));
  gamma = std::atan2(R(2, 1), -R(2, 0));
}

namespace {

constexpr int kMaxFact = 256;

const double* log_fact_table() {
  static const auto table = [] {
    std::array<double, kMaxFact> t{};
    for (int n = 0; n < kMaxFact; ++n) t[static_cast<size_t>(n)] = std::lgamma(n + 1.0);
    return t;
  }();
  return table.data();
}

double log_fact(int n) { return log_fact_table()[n]; }

}  // namespace

double wigner_small_d(int l, int mp, int m, double beta) {
  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);
  const double pref =
      0.5 * (log_fact(l + mp) + log_fact(l - mp) + log_fact(l + m) + log_fact(l - m));
  const int s_lo = std::max(0, m - mp);
  const int s_hi = std::min(l + m, l - mp);
  double sum = 0.0;
  for (int k = s_lo; k <= s_hi; ++k) {
    const int pc = 2 * l + m - mp - 2 * k;  // power of cos(beta/2)
    const int ps = mp - m + 2 * k;          // power of sin(beta/2)
    if ((c == 0.0 && pc > 0) || (s == 0.0 && ps > 0)) continue;
    const double lg =
        pref - log_fact(l + m - k) - log_fact(k) - log_fact(mp - m + k) - log_fact(l - mp - k);
    double term = std::exp(lg);
    if (pc > 0) term *= std::pow(c, pc);
    if (ps > 0) term *= std::pow(s, ps);
    sum += (((mp - m + k) % 2) != 0 ? -term : term);
  }
  return sum;
}

WignerD::WignerD(const Eigen::Matrix3d& rotation, int lmax) : lmax_(lmax) {
  require_rotation(rotation);
  double alpha, beta, gamma;
  euler_zyz(rotation, alpha, beta, gamma);
  blocks_.reserve(static_cast<size_t>(lmax + 1));
  for (int l = 0; l <= lmax; ++l) {
    Eigen::MatrixXcd D(2 * l + 1, 2 * l + 1);
    for (int mp = -l; mp <= l; ++mp) {
      const Complex pa = std::exp(Complex(0.0, -mp * alpha));
      for (int m = -l; m <= l; ++m) {
        D(mp + l, m + l) = pa * wigner_small_d(l, mp, m, beta) * std::exp(Complex(0.0, -m * gamma));
      }
    }
    blocks_.push_back(std::move(D));
  }
}

SphCoeffField WignerD::rotate(const SphCoeffField& coeffs) const {
  if (coeffs.lmax != lmax_) {
    throw std::invalid_argument("WignerD::rotate: lmax mismatch");
  }
  SphCoeffField out(lmax_);
  for (int l = 0; l <= lmax_; ++l) {
    Eigen::Map<const Eigen::VectorXcd> in(coeffs.values.data() + l * l, 2 * l + 1);
    Eigen::Map<Eigen::VectorXcd>(out.values.data() + l * l, 2 * l + 1) = blocks_[static_cast<size_t>(l)] * in;
  }
  return out;
}

SphCoeffField wigner_rotate(const SphCoeffField& coeffs, const Eigen::Matrix3d& rotation) {
  return WignerD(rotation, coeffs.lmax).rotate(coeffs);
}

}  // namespace r3s2
