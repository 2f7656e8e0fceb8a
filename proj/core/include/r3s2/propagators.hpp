#pragma once

#include <Eigen/Dense>

#include "r3s2/coeffs.hpp"

namespace r3s2 {

enum class ProcessKind { Diffusion, Completion, Elliptic };

struct ProcessParams {
  ProcessKind process = ProcessKind::Diffusion;
  double D33 = 1.0;   ///< spatial diffusivity along the orientation axis
  double D44 = 1.0;   ///< angular diffusivity
  double D11 = 0.0;   ///< transverse spatial diffusivity (elliptic only)
  double t = 1.0;     ///< evolution time
  double alpha = 1.0; ///< resolvent decay rate
  int gamma_k = 1;    ///< Gamma-distributed traveling-time shape

  /// Throws std::invalid_argument on violated parameter constraints.
  void validate() const;
};

enum class EvolutionOp { Evolve, Resolvent, GammaResolvent };

/// Dense matrix mapping the fixed-m coefficient block u-hat to w-hat at one
/// frequency magnitude r, for the requested operation. This is the reusable
/// building block behind the per-vector operations below; kernel synthesis
/// caches it per (m, r).
Eigen::MatrixXcd propagator_matrix(int m, int lmax, double r, const ProcessParams& p,
                                   EvolutionOp op);

/// w-hat = exp{(-D33 r^2 M1 - D44 Lambda) t} u-hat.
SphCoeffVector evolve_diffusion(const SphCoeffVector& u, double r, const ProcessParams& p);

/// w-hat = alpha (alpha I + D33 r^2 M1 + D44 Lambda)^{-1} u-hat.
SphCoeffVector resolvent_diffusion(const SphCoeffVector& u, double r, const ProcessParams& p);

/// w-hat = exp{-(D44 Lambda + i r M2) t} u-hat.
SphCoeffVector evolve_completion(const SphCoeffVector& u, double r, const ProcessParams& p);

/// Solves (alpha I + D44 Lambda + i r M2) w-hat = alpha u-hat by direct LU;
/// well-posed at every r, including eigenvalue branch points.
SphCoeffVector resolvent_completion(const SphCoeffVector& u, double r, const ProcessParams& p);

/// Same resolvent through the GSWE eigen-expansion with bi-orthogonality
/// weights; an independent route valid away from branch points.
SphCoeffVector resolvent_completion_eigen(const SphCoeffVector& u, double r,
                                          const ProcessParams& p);

/// Substitutes r -> r sqrt((D33 - D11)/D33) inside the diffusion propagator
/// and applies the extra factor exp(-r^2 D11 t).
SphCoeffVector evolve_elliptic(const SphCoeffVector& u, double r, const ProcessParams& p);

/// k-fold resolvent [alpha (alpha I + A)^{-1}]^k with A the generator of
/// p.process (diffusion or completion).
SphCoeffVector gamma_resolvent(const SphCoeffVector& u, double r, const ProcessParams& p);

}  // namespace r3s2
