#include <benchmark/benchmark.h>

#include <r3s2/eigensystem.hpp>
#include <r3s2/propagators.hpp>
#include <r3s2/random_walk.hpp>
#include <r3s2/sampling.hpp>
#include <r3s2/shift_twist.hpp>
#include <r3s2/sphere_transform.hpp>
#include <r3s2/spherical_harmonics.hpp>
#include <r3s2/synthesis.hpp>
#include <r3s2/wigner.hpp>

namespace {

using namespace r3s2;

void bm_swe_eigensystem(benchmark::State& state) {
  const int lmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(swe_eigensystem(1, 2.5, lmax));
  }
}
BENCHMARK(bm_swe_eigensystem)->Arg(12)->Arg(24)->Arg(48);

void bm_gswe_eigensystem(benchmark::State& state) {
  const int lmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gswe_eigensystem(1, 2.5, lmax));
  }
}
BENCHMARK(bm_gswe_eigensystem)->Arg(12)->Arg(24)->Arg(48);

void bm_propagator_matrix(benchmark::State& state) {
  ProcessParams p;
  p.process = ProcessKind::Diffusion;
  p.D33 = 1.0;
  p.D44 = 0.1;
  p.t = 2.0;
  const int lmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int m = 0; m <= lmax; ++m) {
      benchmark::DoNotOptimize(propagator_matrix(m, lmax, 1.7, p, EvolutionOp::Evolve));
    }
  }
}
BENCHMARK(bm_propagator_matrix)->Arg(8)->Arg(12);

void bm_wigner_rotate(benchmark::State& state) {
  const int lmax = static_cast<int>(state.range(0));
  SphCoeffField coeffs(lmax);
  for (size_t i = 0; i < coeffs.values.size(); ++i) {
    coeffs.values[i] = Complex{1.0 / (1.0 + static_cast<double>(i)), 0.1};
  }
  Eigen::Matrix3d r;
  r = Eigen::AngleAxisd(0.7, Vec3(1, 2, 2).normalized());
  for (auto _ : state) {
    benchmark::DoNotOptimize(wigner_rotate(coeffs, r));
  }
}
BENCHMARK(bm_wigner_rotate)->Arg(8)->Arg(12);

void bm_sphere_transform_forward(benchmark::State& state) {
  const OrientationSampling dirs = icosphere_sampling(2);
  const SphereTransform transform(dirs, static_cast<int>(state.range(0)));
  Eigen::VectorXd samples(dirs.size());
  for (int i = 0; i < dirs.size(); ++i) samples(i) = std::sin(0.3 * i);
  for (auto _ : state) {
    benchmark::DoNotOptimize(transform.forward_real(samples));
  }
}
BENCHMARK(bm_sphere_transform_forward)->Arg(8)->Arg(10);

void bm_spatial_kernel(benchmark::State& state) {
  const FrequencyGrid grid = make_grid(static_cast<int>(state.range(0)), 2);
  ProcessParams p;
  p.process = ProcessKind::Diffusion;
  p.D33 = 1.0;
  p.D44 = 0.1;
  p.t = 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_spatial_kernel(grid, p, 8));
  }
}
BENCHMARK(bm_spatial_kernel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void bm_random_walks(benchmark::State& state) {
  WalkConfig cfg;
  cfg.process = WalkProcess::Diffusion;
  cfg.walks = state.range(0);
  cfg.steps = 200;
  cfg.t = 2.0;
  cfg.D33 = 1.0;
  cfg.D44 = 0.1;
  cfg.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(cfg));
  }
}
BENCHMARK(bm_random_walks)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void bm_shift_twist(benchmark::State& state) {
  const FrequencyGrid grid = make_grid(static_cast<int>(state.range(0)), 2);
  ProcessParams p;
  p.process = ProcessKind::Diffusion;
  p.D33 = 1.0;
  p.D44 = 0.1;
  p.t = 1.0;
  const OrientationSampling dirs = icosphere_sampling(1);
  const R3S2Field k = sh_to_samples(compute_spatial_kernel(grid, p, 4), dirs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shift_twist_convolve(k, k, 4));
  }
}
BENCHMARK(bm_shift_twist)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
