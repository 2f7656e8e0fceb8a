#include <doctest.h>

#include <cmath>
#include <r3s2/field.hpp>
#include <r3s2/frequency_grid.hpp>
#include <r3s2/reorientation.hpp>
#include <r3s2/spatial_fft.hpp>
#include <r3s2/symmetry.hpp>
#include <r3s2/synthesis.hpp>
#include <r3s2/wigner.hpp>

#include "oracles.hpp"

using namespace r3s2;

TEST_CASE("frequency grid geometry") {
  const FrequencyGrid g = make_grid(2, 1);
  CHECK(g.axis_count() == 5);
  CHECK(g.total() == 125);
  CHECK(g.spacing() == doctest::Approx(M_PI / 2).epsilon(1e-15));
  const double expect[5] = {-M_PI, -M_PI / 2, 0.0, M_PI / 2, M_PI};
  for (int i = 0; i < 5; ++i) CHECK(g.axis_value(i) == doctest::Approx(expect[i]));
  CHECK(g.voxel_pitch() == doctest::Approx(4.0 / 5.0).epsilon(1e-15));

  const FrequencyGrid h = make_grid(16, 2);
  CHECK(h.spacing() == doctest::Approx(2 * M_PI / 16));
  CHECK(h.voxel_pitch() == doctest::Approx(32.0 / (2.0 * 33.0)));
  // spacing * pitch * axis_count == 2 pi (conjugate DFT grids)
  CHECK(h.spacing() * h.voxel_pitch() * h.axis_count() == doctest::Approx(2 * M_PI));
}

TEST_CASE("frequency_frame is a rotation mapping e_z to the ray") {
  oracle::Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const Vec3 w(rng.range(-3, 3), rng.range(-3, 3), rng.range(-3, 3));
    if (w.norm() < 1e-6) continue;
    const Eigen::Matrix3d r = frequency_frame(w);
    CHECK((r.transpose() * r - Eigen::Matrix3d::Identity()).norm() < 1e-12);
    CHECK(r.determinant() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((r.col(2) - w.normalized()).norm() < 1e-12);
  }
  // Degenerate rays.
  CHECK((frequency_frame(Vec3(0, 0, 2)) - Eigen::Matrix3d::Identity()).norm() < 1e-14);
  const Eigen::Matrix3d flip = frequency_frame(Vec3(0, 0, -1));
  CHECK((flip * Vec3(0, 0, 1) - Vec3(0, 0, -1)).norm() < 1e-14);
  CHECK(flip.determinant() == doctest::Approx(1.0));
  CHECK((frequency_frame(Vec3(0, 0, 0)) - Eigen::Matrix3d::Identity()).norm() < 1e-14);
}

TEST_CASE("zero-frequency slot evolves the e_z delta by the angular semigroup") {
  const FrequencyGrid grid = make_grid(2, 2);
  ProcessParams p;
  p.process = ProcessKind::Diffusion;
  p.D33 = 1.0;
  p.D44 = 0.3;
  p.t = 0.7;
  const int lmax = 6;
  const R3S2Field freq = compute_kernel(grid, p, lmax);
  REQUIRE(freq.storage == R3S2Field::Storage::SH);
  REQUIRE(freq.frequency_domain);
  const SphCoeffField c0 = freq.coeffs_at(grid.n_half, grid.n_half, grid.n_half);
  for (int l = 0; l <= lmax; ++l) {
    for (int m = -l; m <= l; ++m) {
      const Complex expect =
          m == 0 ? std::sqrt((2.0 * l + 1.0) / (4.0 * M_PI)) *
                       std::exp(-p.D44 * l * (l + 1) * p.t)
                 : Complex{0.0, 0.0};
      CHECK(std::abs(c0.at(l, m) - expect) < 1e-12);
    }
  }
}

TEST_CASE("t = 0 kernel is the band-limited delta at e_z in every slot") {
  const FrequencyGrid grid = make_grid(1, 1);
  ProcessParams p;
  p.process = ProcessKind::Completion;
  p.D44 = 0.5;
  p.t = 0.0;
  const int lmax = 4;
  const R3S2Field freq = compute_kernel(grid, p, lmax);
  for (int k = 0; k < grid.axis_count(); ++k) {
    for (int j = 0; j < grid.axis_count(); ++j) {
      for (int i = 0; i < grid.axis_count(); ++i) {
        const SphCoeffField c = freq.coeffs_at(i, j, k);
        for (int l = 0; l <= lmax; ++l) {
          for (int m = -l; m <= l; ++m) {
            const Complex expect =
                m == 0 ? Complex{std::sqrt((2.0 * l + 1.0) / (4.0 * M_PI)), 0.0}
                       : Complex{0.0, 0.0};
            CHECK(std::abs(c.at(l, m) - expect) < 1e-10);
          }
        }
      }
    }
  }
}

TEST_CASE("equal-norm frequencies related by a z-rotation of the coefficients") {
  // The lattice points (a,b,c) and (-b,a,c) have equal norm and are related
  // by the exact 90-degree rotation about e_z, so their coefficient stacks
  // must be Wigner-rotations of one another.
  const FrequencyGrid grid = make_grid(2, 2);
  ProcessParams p;
  p.process = ProcessKind::Diffusion;
  p.D33 = 1.0;
  p.D44 = 0.2;
  p.t = 0.5;
  const int lmax = 6;
  const R3S2Field freq = compute_kernel(grid, p, lmax);
  const int n = grid.n_half;
  Eigen::Matrix3d rz90;
  rz90 << 0, -1, 0, 1, 0, 0, 0, 0, 1;
  const int a = 1, b = 2, c = 1;
  const SphCoeffField ca = freq.coeffs_at(n + a, n + b, n + c);
  const SphCoeffField cb = freq.coeffs_at(n - b, n + a, n + c);
  const SphCoeffField rot = wigner_rotate(ca, rz90);
  for (size_t idx = 0; idx < rot.values.size(); ++idx) {
    CHECK(std::abs(rot.values[idx] - cb.values[idx]) < 1e-10);
  }
}

TEST_CASE("all-ones frequency data transforms to a centered delta") {
  const FrequencyGrid grid = make_grid(3, 1);
  R3S2Field freq;
  freq.nx = freq.ny = freq.nz = grid.axis_count();
  freq.voxel_size = grid.spacing();
  freq.storage = R3S2Field::Storage::SH;
  freq.lmax = 0;
  freq.frequency_domain = true;
  freq.complex_data = true;
  freq.allocate();
  for (auto& v : freq.cplx_values) v = Complex{1.0, 0.0};
  const R3S2Field spatial = inverse_spatial_fft(freq, grid);
  const int h = grid.n_half;
  const double scale = std::pow(grid.spacing() / (2 * M_PI), 3) * grid.total();
  for (int k = 0; k < spatial.nz; ++k) {
    for (int j = 0; j < spatial.ny; ++j) {
      for (int i = 0; i < spatial.nx; ++i) {
        const double expect = (i == h && j == h && k == h) ? scale : 0.0;
        CHECK(std::abs(spatial.cplx_at(i, j, k, 0).real() - expect) < 1e-10);
        CHECK(std::abs(spatial.cplx_at(i, j, k, 0).imag()) < 1e-10);
      }
    }
  }
}

TEST_CASE("forward-backward DFT pair preserves energy") {
  oracle::Rng rng(5);
  const int n = 5;
  std::vector<Complex> data(n * n * n);
  for (auto& v : data) v = Complex{rng.range(-1, 1), rng.range(-1, 1)};
  const std::vector<Complex> orig = data;
  double e_space = 0.0;
  for (const auto& v : data) e_space += std::norm(v);
  dft3(data.data(), n, n, n, false);
  double e_freq = 0.0;
  for (const auto& v : data) e_freq += std::norm(v);
  CHECK(e_freq == doctest::Approx(e_space * n * n * n).epsilon(1e-12));
  dft3(data.data(), n, n, n, true);
  for (size_t i = 0; i < data.size(); ++i) {
    CHECK(std::abs(data[i] / static_cast<double>(n * n * n) - orig[i]) < 1e-12);
  }
}

TEST_CASE("hermitian symmetry: violation measured, enforced, and gated") {
  const FrequencyGrid grid = make_grid(2, 2);
  ProcessParams p;
  p.process = ProcessKind::Diffusion;
  p.D33 = 1.0;
  p.D44 = 0.1;
  p.t = 1.0;
  R3S2Field freq = compute_kernel(grid, p, 4);
  CHECK(hermitian_violation(freq) < 1e-10);
  // Perturb one slot; the violation must register, enforcement must clear it.
  freq.cplx_at(0, 1, 2, 3) += Complex{0.05, 0.02};
  CHECK(hermitian_violation(freq) > 1e-4);
  R3S2Field broken = freq;
  CHECK_THROWS_AS(inverse_spatial_fft(broken, grid), std::runtime_error);
  enforce_hermitian(freq);
  CHECK(hermitian_violation(freq) < 1e-14);
}

TEST_CASE("diffusion kernel mass, reality, and near-nonnegativity") {
  const FrequencyGrid grid = make_grid(8, 2);
  ProcessParams p;
  p.process = ProcessKind::Diffusion;
  p.D33 = 1.0;
  p.D44 = 0.1;
  p.t = 1.0;
  const int lmax = 8;
  const R3S2Field spatial = compute_spatial_kernel(grid, p, lmax);
  double residue = 0.0;
  const R3S2Field samples = sh_to_samples(spatial, icosphere_sampling(2), &residue);
  CHECK(residue < 1e-8);
  CHECK(field_mass(samples) == doctest::Approx(1.0).epsilon(1e-2));
  double lo = 0.0, hi = 0.0;
  for (double v : samples.real_values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(hi > 0.0);
  // A band-limited delta-like kernel keeps small negative ringing lobes; the
  // bound tolerates them but rejects a sign error or a broken DFT layout.
  CHECK(lo > -5e-2 * hi);
}

TEST_CASE("gamma kernel has unit mass and is centered forward for completion") {
  const FrequencyGrid grid = make_grid(8, 4);
  ProcessParams p;
  p.process = ProcessKind::Completion;
  p.D44 = 0.5;
  p.alpha = 0.25;
  p.gamma_k = 2;
  const R3S2Field spatial = gamma_kernel(grid, p, 8);
  const R3S2Field samples = sh_to_samples(spatial, icosphere_sampling(2));
  CHECK(field_mass(samples) == doctest::Approx(1.0).epsilon(2e-2));
}
