#include "r3s2/sphere_transform.hpp"

#include <stdexcept>

namespace r3s2 {

SphereTransform::SphereTransform(const OrientationSampling& sampling, int lmax)
    : sampling_(sampling), lmax_(lmax) {
  const int n = sampling_.size();
  const int k = SHIndex::count(lmax);
  if (n < k) {
    throw std::invalid_argument("SphereTransform: sampling does not resolve lmax");
  }
  basis_.resize(n, k);
  for (int i = 0; i < n; ++i) {
    const auto row = sh_basis_row(lmax, sampling_.directions[static_cast<size_t>(i)]);
    for (int j = 0; j < k; ++j) basis_(i, j) = row[static_cast<size_t>(j)];
  }
  sqrt_w_.resize(n);
  for (int i = 0; i < n; ++i) sqrt_w_(i) = std::sqrt(sampling_.weights[static_cast<size_t>(i)]);
  solver_.compute(sqrt_w_.asDiagonal() * basis_);
  if (solver_.rank() < k) {
    throw std::runtime_error("SphereTransform: design matrix rank-deficient");
  }
}

SphCoeffField SphereTransform::forward(const Eigen::VectorXcd& samples) const {
  if (samples.size() != basis_.rows()) {
    throw std::invalid_argument("SphereTransform::forward: sample count mismatch");
  }
  const Eigen::VectorXcd c = solver_.solve((sqrt_w_.array() * samples.array()).matrix());
  SphCoeffField out(lmax_);
  for (int j = 0; j < c.size(); ++j) out.values[static_cast<size_t>(j)] = c(j);
  return out;
}

SphCoeffField SphereTransform::forward_real(const Eigen::VectorXd& samples) const {
  return forward(samples.cast<Complex>());
}

Eigen::VectorXcd SphereTransform::inverse(const SphCoeffField& coeffs) const {
  if (coeffs.lmax != lmax_) {
    throw std::invalid_argument("SphereTransform::inverse: lmax mismatch");
  }
  return basis_ * Eigen::Map<const Eigen::VectorXcd>(coeffs.values.data(),
                                                     static_cast<long>(coeffs.values.size()));
}

Eigen::VectorXcd SphereTransform::synthesize(const SphCoeffField& coeffs,
                                             const std::vector<Vec3>& directions) {
  Eigen::VectorXcd out(static_cast<long>(directions.size()));
  for (size_t i = 0; i < directions.size(); ++i) {
    const auto row = sh_basis_row(coeffs.lmax, directions[i]);
    Complex acc{0.0, 0.0};
    for (size_t j = 0; j < row.size(); ++j) acc += coeffs.values[j] * row[j];
    out(static_cast<long>(i)) = acc;
  }
  return out;
}

}  // namespace r3s2
