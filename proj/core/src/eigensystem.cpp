#include "r3s2/eigensystem.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "r3s2/operators.hpp"

namespace r3s2 {

namespace {

constexpr double kRealTol = 1e-8;

/// Rotate the first significant entry of each column to be real-positive.
void fix_phases(Eigen::MatrixXcd& V) {
  for (int c = 0; c < V.cols(); ++c) {
    const double scale = V.col(c).cwiseAbs().maxCoeff();
    for (int r = 0; r < V.rows(); ++r) {
      const std::complex<double> v = V(r, c);
      if (std::abs(v) > 1e-10 * scale) {
        V.col(c) *= std::conj(v) / std::abs(v);
        break;
      }
    }
  }
}

double max_residual(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& lam,
                    const Eigen::MatrixXcd& V) {
  double res = 0.0;
  for (int c = 0; c < V.cols(); ++c) {
    res = std::max(res, (A * V.col(c) - lam(c) * V.col(c)).cwiseAbs().maxCoeff());
  }
  return res;
}

void require_converged(double residual, double scale) {
  if (!(residual < 1e-8 * (1.0 + scale))) {
    std::ostringstream os;
    os << "spheroidal eigensolve did not converge: residual " << residual;
    throw std::runtime_error(os.str());
  }
}

}  // namespace

SpheroidalEigensystem swe_eigensystem(int m, double rho, int lmax) {
  if (rho < 0.0) throw std::invalid_argument("swe_eigensystem: rho < 0");
  const Eigen::MatrixXd A =
      rho * rho * build_m1(m, lmax).dense() + build_lambda(m, lmax).dense().eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("swe_eigensystem: eigensolver failed");
  }

  SpheroidalEigensystem out;
  out.m = m;
  out.lmax = lmax;
  out.rho = rho;
  out.eigenvalues = es.eigenvalues().cast<std::complex<double>>();
  out.vectors = es.eigenvectors().cast<std::complex<double>>();
  fix_phases(out.vectors);
  out.is_real.assign(static_cast<size_t>(out.size()), true);
  out.gram.resize(out.size());
  for (int c = 0; c < out.size(); ++c) {
    out.gram(c) = out.vectors.col(c).transpose() * out.vectors.col(c);
  }
  out.residual = max_residual(A.cast<std::complex<double>>(), out.eigenvalues, out.vectors);
  require_converged(out.residual, A.norm());
  return out;
}

SpheroidalEigensystem gswe_eigensystem(int m, double rho, int lmax) {
  if (rho < 0.0) throw std::invalid_argument("gswe_eigensystem: rho < 0");
  const int n = lmax - std::abs(m) + 1;
  Eigen::MatrixXcd A = build_lambda(m, lmax).dense().cast<std::complex<double>>();
  const TriDiagOperator m2 = build_m2(m, lmax);
  const std::complex<double> irho(0.0, rho);
  for (int j = 0; j + 1 < n; ++j) {
    A(j, j + 1) += irho * m2.off1(j);
    A(j + 1, j) += irho * m2.off1(j);
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("gswe_eigensystem: eigensolver failed");
  }

  // Ascending real part; within a conjugate pair Im > 0 first.
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  const Eigen::VectorXcd& lam = es.eigenvalues();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (lam(a).real() != lam(b).real()) return lam(a).real() < lam(b).real();
    return lam(a).imag() > lam(b).imag();
  });

  SpheroidalEigensystem out;
  out.m = m;
  out.lmax = lmax;
  out.rho = rho;
  out.eigenvalues.resize(n);
  out.vectors.resize(n, n);
  for (int c = 0; c < n; ++c) {
    out.eigenvalues(c) = lam(order[static_cast<size_t>(c)]);
    out.vectors.col(c) = es.eigenvectors().col(order[static_cast<size_t>(c)]).normalized();
  }
  fix_phases(out.vectors);
  out.is_real.resize(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c) {
    out.is_real[static_cast<size_t>(c)] =
        std::abs(out.eigenvalues(c).imag()) <= kRealTol * (1.0 + std::abs(out.eigenvalues(c)));
  }
  out.gram.resize(n);
  double min_gram = std::numeric_limits<double>::infinity();
  for (int c = 0; c < n; ++c) {
    out.gram(c) = out.vectors.col(c).transpose() * out.vectors.col(c);
    min_gram = std::min(min_gram, std::abs(out.gram(c)));
  }
  out.near_defective = min_gram < 1e-8;
  out.residual = max_residual(A, out.eigenvalues, out.vectors);
  require_converged(out.residual, A.norm());
  return out;
}

}  // namespace r3s2
