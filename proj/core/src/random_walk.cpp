#include "r3s2/random_walk.hpp"

#include <Eigen/Geometry>
#include <cmath>
#include <random>
#include <stdexcept>

#include "r3s2/parallel.hpp"
#include "r3s2/reorientation.hpp"

namespace r3s2 {

void WalkConfig::validate() const {
  if (walks < 1 || steps < 1) {
    throw std::invalid_argument("WalkConfig: walks and steps must be >= 1");
  }
  if (!(t >= 0.0) || !(D44 >= 0.0)) {
    throw std::invalid_argument("WalkConfig: t and D44 must be non-negative");
  }
  if (process == WalkProcess::Diffusion && !(D33 >= 0.0)) {
    throw std::invalid_argument("WalkConfig: D33 must be non-negative");
  }
  if (gamma_k < 1) throw std::invalid_argument("WalkConfig: gamma_k must be >= 1");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

Endpoint run_walk(const WalkConfig& cfg, double total_time, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, M_PI);
  const double n_steps = static_cast<double>(cfg.steps);
  const double spatial_scale = cfg.process == WalkProcess::Diffusion
                                   ? std::sqrt(2.0 * total_time * cfg.D33 / n_steps)
                                   : (cfg.sqrt_completion_step
                                          ? std::sqrt(total_time / n_steps)
                                          : total_time / n_steps);
  const double angular_factor = cfg.half_angular_step ? 2.0 : 4.0;
  const double angular_scale = std::sqrt(angular_factor * total_time * cfg.D44 / n_steps);

  Vec3 y = Vec3::Zero();
  Vec3 n = Vec3::UnitZ();
  for (int k = 0; k < cfg.steps; ++k) {
    const double eps = cfg.process == WalkProcess::Diffusion ? gauss(rng) : 1.0;
    y += eps * spatial_scale * n;
    const double gamma = unif(rng);
    const double beta = gauss(rng) * angular_scale;
    n = section_rotation(n) *
        (Eigen::AngleAxisd(gamma, Vec3::UnitZ()) * Eigen::AngleAxisd(beta, Vec3::UnitY()))
            .toRotationMatrix() *
        Vec3::UnitZ();
    n.normalize();
  }
  return Endpoint{y, n};
}

RandomWalkBatch simulate_impl(const WalkConfig& cfg, bool random_time) {
  cfg.validate();
  if (random_time && !(cfg.alpha > 0.0)) {
    throw std::invalid_argument("simulate_resolvent: alpha must be positive");
  }
  RandomWalkBatch batch;
  batch.config = cfg;
  batch.endpoints.resize(static_cast<size_t>(cfg.walks));
  parallel_for(static_cast<int>(cfg.walks), [&](int w) {
    std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(w))));
    double total_time = cfg.t;
    if (random_time) {
      // Gamma(k, alpha) as a sum of exponentials; k = 1 is Exp(alpha).
      std::exponential_distribution<double> expo(cfg.alpha);
      total_time = 0.0;
      for (int i = 0; i < cfg.gamma_k; ++i) total_time += expo(rng);
    }
    batch.endpoints[static_cast<size_t>(w)] = run_walk(cfg, total_time, rng);
  });
  return batch;
}

}  // namespace

RandomWalkBatch simulate(const WalkConfig& cfg) { return simulate_impl(cfg, false); }

RandomWalkBatch simulate_resolvent(const WalkConfig& cfg) { return simulate_impl(cfg, true); }

}  // namespace r3s2
