#include "r3s2/propagators.hpp"

#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

#include "r3s2/eigensystem.hpp"
#include "r3s2/operators.hpp"

namespace r3s2 {

void ProcessParams::validate() const {
  if (!(D44 > 0.0)) throw std::invalid_argument("ProcessParams: D44 must be positive");
  if (process != ProcessKind::Completion && !(D33 > 0.0)) {
    throw std::invalid_argument("ProcessParams: D33 must be positive");
  }
  if (process == ProcessKind::Elliptic && !(D11 > 0.0 && D11 < D33)) {
    throw std::invalid_argument("ProcessParams: elliptic case needs 0 < D11 < D33");
  }
  if (t < 0.0) throw std::invalid_argument("ProcessParams: t must be non-negative");
  if (gamma_k < 1) throw std::invalid_argument("ProcessParams: gamma_k must be >= 1");
}

namespace {

using Cplx = std::complex<double>;

Eigen::MatrixXcd diffusion_matrix(int m, int lmax, double r, const ProcessParams& p,
                                  EvolutionOp op, double extra_damp) {
  const Eigen::MatrixXd A = p.D33 * r * r * build_m1(m, lmax).dense() +
                            p.D44 * build_lambda(m, lmax).dense().eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("propagator: diffusion eigensolve failed");
  }
  Eigen::VectorXd f(es.eigenvalues().size());
  for (int i = 0; i < f.size(); ++i) {
    const double lam = es.eigenvalues()(i);
    switch (op) {
      case EvolutionOp::Evolve:
        f(i) = std::exp(-(lam + extra_damp) * p.t);
        break;
      case EvolutionOp::Resolvent:
        if (!(p.alpha > 0.0)) throw std::invalid_argument("propagator: alpha must be positive");
        f(i) = p.alpha / (p.alpha + lam);
        break;
      case EvolutionOp::GammaResolvent:
        if (!(p.alpha > 0.0)) throw std::invalid_argument("propagator: alpha must be positive");
        f(i) = std::pow(p.alpha / (p.alpha + lam), p.gamma_k);
        break;
    }
  }
  const Eigen::MatrixXd M =
      es.eigenvectors() * f.asDiagonal() * es.eigenvectors().transpose();
  return M.cast<Cplx>();
}

Eigen::MatrixXcd completion_generator(int m, int lmax, double r, const ProcessParams& p) {
  const int n = lmax - std::abs(m) + 1;
  Eigen::MatrixXcd B = (p.D44 * build_lambda(m, lmax).dense()).cast<Cplx>();
  const TriDiagOperator m2 = build_m2(m, lmax);
  const Cplx ir(0.0, r);
  for (int j = 0; j + 1 < n; ++j) {
    B(j, j + 1) += ir * m2.off1(j);
    B(j + 1, j) += ir * m2.off1(j);
  }
  return B;
}

SphCoeffVector apply(const SphCoeffVector& u, double r, const ProcessParams& p, EvolutionOp op) {
  p.validate();
  if (r < 0.0) throw std::invalid_argument("propagator: r must be non-negative");
  const Eigen::MatrixXcd M = propagator_matrix(u.m, u.lmax, r, p, op);
  SphCoeffVector out(u.m, u.lmax);
  Eigen::Map<const Eigen::VectorXcd> in(u.values.data(), u.size());
  Eigen::Map<Eigen::VectorXcd>(out.values.data(), out.size()) = M * in;
  return out;
}

}  // namespace

Eigen::MatrixXcd propagator_matrix(int m, int lmax, double r, const ProcessParams& p,
                                   EvolutionOp op) {
  switch (p.process) {
    case ProcessKind::Diffusion:
      return diffusion_matrix(m, lmax, r, p, op, 0.0);
    case ProcessKind::Elliptic: {
      const double r_eff = r * std::sqrt((p.D33 - p.D11) / p.D33);
      return diffusion_matrix(m, lmax, r_eff, p, op, r * r * p.D11);
    }
    case ProcessKind::Completion: {
      const Eigen::MatrixXcd B = completion_generator(m, lmax, r, p);
      if (op == EvolutionOp::Evolve) {
        return (-p.t * B).exp();
      }
      if (!(p.alpha > 0.0)) throw std::invalid_argument("propagator: alpha must be positive");
      const int n = static_cast<int>(B.rows());
      const Eigen::MatrixXcd R =
          p.alpha *
          (p.alpha * Eigen::MatrixXcd::Identity(n, n) + B).partialPivLu().solve(
              Eigen::MatrixXcd::Identity(n, n));
      if (op == EvolutionOp::Resolvent) return R;
      Eigen::MatrixXcd Rk = R;
      for (int k = 1; k < p.gamma_k; ++k) Rk = Rk * R;
      return Rk;
    }
  }
  throw std::logic_error("propagator: unknown process");
}

SphCoeffVector evolve_diffusion(const SphCoeffVector& u, double r, const ProcessParams& p) {
  if (p.process != ProcessKind::Diffusion) {
    throw std::invalid_argument("evolve_diffusion: wrong process kind");
  }
  return apply(u, r, p, EvolutionOp::Evolve);
}

SphCoeffVector resolvent_diffusion(const SphCoeffVector& u, double r, const ProcessParams& p) {
  if (p.process != ProcessKind::Diffusion) {
    throw std::invalid_argument("resolvent_diffusion: wrong process kind");
  }
  return apply(u, r, p, EvolutionOp::Resolvent);
}

SphCoeffVector evolve_completion(const SphCoeffVector& u, double r, const ProcessParams& p) {
  ProcessParams q = p;
  q.process = ProcessKind::Completion;
  return apply(u, r, q, EvolutionOp::Evolve);
}

SphCoeffVector resolvent_completion(const SphCoeffVector& u, double r, const ProcessParams& p) {
  ProcessParams q = p;
  q.process = ProcessKind::Completion;
  return apply(u, r, q, EvolutionOp::Resolvent);
}

SphCoeffVector resolvent_completion_eigen(const SphCoeffVector& u, double r,
                                          const ProcessParams& p) {
  p.validate();
  if (!(p.alpha > 0.0)) throw std::invalid_argument("resolvent: alpha must be positive");
  // D44 Lambda + i r M2 = D44 (Lambda + i rho M2) with rho = r / D44.
  const double rho = r / p.D44;
  const SpheroidalEigensystem es = gswe_eigensystem(u.m, rho, u.lmax);
  if (es.near_defective) {
    throw std::runtime_error("resolvent_completion_eigen: too close to a branch point");
  }
  Eigen::Map<const Eigen::VectorXcd> in(u.values.data(), u.size());
  Eigen::VectorXcd out_v = Eigen::VectorXcd::Zero(u.size());
  for (int j = 0; j < es.size(); ++j) {
    const Eigen::VectorXcd c = es.vectors.col(j);
    const Cplx proj = (c.transpose() * in).value() / es.gram(j);
    out_v += (p.alpha / (p.alpha + p.D44 * es.eigenvalues(j))) * proj * c;
  }
  SphCoeffVector out(u.m, u.lmax);
  Eigen::Map<Eigen::VectorXcd>(out.values.data(), out.size()) = out_v;
  return out;
}

SphCoeffVector evolve_elliptic(const SphCoeffVector& u, double r, const ProcessParams& p) {
  if (p.process != ProcessKind::Elliptic) {
    throw std::invalid_argument("evolve_elliptic: wrong process kind");
  }
  return apply(u, r, p, EvolutionOp::Evolve);
}

SphCoeffVector gamma_resolvent(const SphCoeffVector& u, double r, const ProcessParams& p) {
  return apply(u, r, p, EvolutionOp::GammaResolvent);
}

}  // namespace r3s2
