#include "r3s2/synthesis.hpp"

#include <cmath>
#include <unordered_map>
#include <vector>

#include "r3s2/parallel.hpp"
#include "r3s2/reorientation.hpp"
#include "r3s2/spatial_fft.hpp"
#include "r3s2/spherical_harmonics.hpp"
#include "r3s2/symmetry.hpp"
#include "r3s2/wigner.hpp"

namespace r3s2 {

namespace {

long quantize_r(double r) { return std::llround(r * 1e9); }

}  // namespace

R3S2Field compute_kernel(const FrequencyGrid& grid, const ProcessParams& p, int lmax,
                         EvolutionOp op) {
  p.validate();
  const int n = grid.axis_count();

  R3S2Field out;
  out.nx = out.ny = out.nz = n;
  out.voxel_size = grid.spacing();
  out.storage = R3S2Field::Storage::SH;
  out.lmax = lmax;
  out.frequency_domain = true;
  out.complex_data = true;
  out.allocate();

  // The propagator depends on the frequency only through its magnitude and
  // on m only through |m|; cache the per-block matrices over the distinct
  // lattice radii and reuse them across each frequency shell.
  std::unordered_map<long, int> r_index;
  std::vector<double> r_values;
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const double r = grid.omega(i, j, k).norm();
        if (r_index.emplace(quantize_r(r), static_cast<int>(r_values.size())).second) {
          r_values.push_back(r);
        }
      }
    }
  }
  std::vector<std::vector<Eigen::MatrixXcd>> props(r_values.size());
  parallel_for(static_cast<int>(r_values.size()), [&](int idx) {
    auto& per_m = props[static_cast<size_t>(idx)];
    per_m.reserve(static_cast<size_t>(lmax) + 1);
    for (int m = 0; m <= lmax; ++m) {
      per_m.push_back(propagator_matrix(m, lmax, r_values[static_cast<size_t>(idx)], p, op));
    }
  });

  parallel_for(n, [&](int k) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const Vec3 w = grid.omega(i, j, k);
        const double r = w.norm();
        const auto& per_m = props[static_cast<size_t>(r_index.at(quantize_r(r)))];
        const Eigen::Matrix3d R = frequency_frame(w);

        // Band-limited delta at e_z in the reoriented chart: the delta sits
        // at R^T e_z there, so every order m contributes.
        const Vec3 n_loc = R.transpose() * Vec3::UnitZ();
        const std::vector<Complex> Y = sh_basis_row(lmax, n_loc);
        SphCoeffField evolved(lmax);
        for (int m = -lmax; m <= lmax; ++m) {
          const int am = std::abs(m);
          Eigen::VectorXcd u(lmax - am + 1);
          for (int l = am; l <= lmax; ++l) {
            u(l - am) = std::conj(Y[static_cast<size_t>(SHIndex{l, m}.flat())]);
          }
          const Eigen::VectorXcd v = per_m[static_cast<size_t>(am)] * u;
          for (int l = am; l <= lmax; ++l) evolved.at(l, m) = v(l - am);
        }

        // Back to the fixed basis.
        const SphCoeffField fixed = wigner_rotate(evolved, R);
        for (int c = 0; c < out.n_channels(); ++c) {
          out.cplx_at(i, j, k, c) = fixed.values[static_cast<size_t>(c)];
        }
      }
    }
  });
  return out;
}

R3S2Field compute_spatial_kernel(const FrequencyGrid& grid, const ProcessParams& p, int lmax,
                                 EvolutionOp op) {
  R3S2Field freq = compute_kernel(grid, p, lmax, op);
  enforce_hermitian(freq);
  return inverse_spatial_fft(freq, grid);
}

R3S2Field gamma_kernel(const FrequencyGrid& grid, const ProcessParams& p, int lmax) {
  return compute_spatial_kernel(grid, p, lmax, EvolutionOp::GammaResolvent);
}

}  // namespace r3s2
