#include "r3s2/shift_twist.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "r3s2/parallel.hpp"
#include "r3s2/reorientation.hpp"
#include "r3s2/spatial_fft.hpp"
#include "r3s2/sphere_transform.hpp"

namespace r3s2 {

namespace {

void require_compatible(const R3S2Field& kernel, const R3S2Field& input) {
  if (kernel.storage != R3S2Field::Storage::Samples ||
      input.storage != R3S2Field::Storage::Samples || kernel.complex_data ||
      input.complex_data) {
    throw std::invalid_argument("shift_twist_convolve: needs real samples-storage fields");
  }
  if (kernel.sampling.size() != input.sampling.size()) {
    throw std::invalid_argument("shift_twist_convolve: orientation sampling mismatch");
  }
  for (int i = 0; i < kernel.sampling.size(); ++i) {
    if ((kernel.sampling.directions[static_cast<size_t>(i)] -
         input.sampling.directions[static_cast<size_t>(i)])
            .norm() > 1e-9) {
      throw std::invalid_argument("shift_twist_convolve: orientation sampling mismatch");
    }
  }
  if (std::abs(kernel.voxel_size - input.voxel_size) > 1e-9 * input.voxel_size) {
    throw std::invalid_argument("shift_twist_convolve: voxel pitch mismatch");
  }
  if (kernel.nx > input.nx || kernel.ny > input.ny || kernel.nz > input.nz) {
    throw std::invalid_argument("shift_twist_convolve: kernel larger than input");
  }
}

/// out[(i+s) % n] = in[i] along every axis.
void cyclic_shift(const Complex* in, Complex* out, int nx, int ny, int nz, int sx, int sy,
                  int sz) {
  for (int k = 0; k < nz; ++k) {
    const int kk = (k + sz) % nz;
    for (int j = 0; j < ny; ++j) {
      const int jj = (j + sy) % ny;
      for (int i = 0; i < nx; ++i) {
        out[(static_cast<long>(kk) * ny + jj) * nx + (i + sx) % nx] =
            in[(static_cast<long>(k) * ny + j) * nx + i];
      }
    }
  }
}

}  // namespace

R3S2Field shift_twist_convolve(const R3S2Field& kernel, const R3S2Field& input, int lmax) {
  require_compatible(kernel, input);
  const int n_orient = input.sampling.size();
  const int nx = input.nx, ny = input.ny, nz = input.nz;
  const long nvox = input.n_voxels();
  const int n_coeff = SHIndex::count(lmax);

  // Per-voxel SH fit of the kernel, zero-padded into the input dims with the
  // kernel center at the input center. The kernel is real, so its complex
  // coefficients obey c_{l,-m} = (-1)^m conj(c_{l,m}) and repack losslessly
  // into (lmax+1)^2 real numbers: slot (l,m) holds Re c_{l,m} and slot
  // (l,-m) holds Im c_{l,m} for m > 0. Real storage keeps the interpolation
  // and synthesis below in real arithmetic.
  const SphereTransform transform(input.sampling, lmax);
  Eigen::MatrixXd coeffs = Eigen::MatrixXd::Zero(n_coeff, nvox);
  const int ox = (nx - kernel.nx) / 2, oy = (ny - kernel.ny) / 2, oz = (nz - kernel.nz) / 2;
  parallel_for(kernel.nz, [&](int k) {
    Eigen::VectorXd samples(n_orient);
    for (int j = 0; j < kernel.ny; ++j) {
      for (int i = 0; i < kernel.nx; ++i) {
        for (int c = 0; c < n_orient; ++c) samples(c) = kernel.real_at(i, j, k, c);
        const SphCoeffField f = transform.forward_real(samples);
        auto col = coeffs.col((static_cast<long>(k + oz) * ny + (j + oy)) * nx + (i + ox));
        for (int l = 0; l <= lmax; ++l) {
          col(SHIndex{l, 0}.flat()) = f.at(l, 0).real();
          for (int m = 1; m <= l; ++m) {
            col(SHIndex{l, m}.flat()) = f.at(l, m).real();
            col(SHIndex{l, -m}.flat()) = f.at(l, m).imag();
          }
        }
      }
    }
  });

  // Input spectra, one per orientation channel.
  std::vector<std::vector<Complex>> u_hat(static_cast<size_t>(n_orient));
  parallel_for(n_orient, [&](int c) {
    auto& spec = u_hat[static_cast<size_t>(c)];
    spec.resize(static_cast<size_t>(nvox));
    for (long v = 0; v < nvox; ++v) {
      spec[static_cast<size_t>(v)] = input.real_values[input.index(0, 0, 0, c) +
                                                       static_cast<size_t>(v)];
    }
    dft3(spec.data(), nx, ny, nz, false);
  });

  const int hx = nx / 2, hy = ny / 2, hz = nz / 2;
  const double dv = std::pow(input.voxel_size, 3);
  const double fft_norm = 1.0 / static_cast<double>(nvox);

  std::vector<std::vector<Complex>> out_spec(
      static_cast<size_t>(n_orient), std::vector<Complex>(static_cast<size_t>(nvox), Complex{0.0, 0.0}));

  for (int cp = 0; cp < n_orient; ++cp) {
    const Eigen::Matrix3d R = section_rotation(input.sampling.directions[static_cast<size_t>(cp)]);
    const Eigen::Matrix3d Rt = R.transpose();
    // Real SH basis at the rotated output directions, matching the real
    // coefficient packing: f = sum_l [c_{l,0} Y^{l,0} + sum_{m>0} 2 Re(c Y)].
    Eigen::MatrixXd basis(n_orient, n_coeff);
    for (int co = 0; co < n_orient; ++co) {
      const Vec3 nr = Rt * input.sampling.directions[static_cast<size_t>(co)];
      const auto row = sh_basis_row(lmax, nr);
      for (int l = 0; l <= lmax; ++l) {
        basis(co, SHIndex{l, 0}.flat()) = row[static_cast<size_t>(SHIndex{l, 0}.flat())].real();
        for (int m = 1; m <= l; ++m) {
          const Complex y = row[static_cast<size_t>(SHIndex{l, m}.flat())];
          basis(co, SHIndex{l, m}.flat()) = 2.0 * y.real();
          basis(co, SHIndex{l, -m}.flat()) = -2.0 * y.imag();
        }
      }
    }

    // Rotated kernel coefficient volume: tricubic Catmull-Rom at R^T z per
    // voxel (a cubic keeps the rotation resampling error well below the
    // angular quadrature error; trilinear dominates it).
    Eigen::MatrixXd rot_coeffs = Eigen::MatrixXd::Zero(n_coeff, nvox);
    parallel_for(nz, [&](int k) {
      for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
          const Vec3 z(i - hx, j - hy, k - hz);
          const Vec3 p = Rt * z;
          const double gx = p.x() + hx, gy = p.y() + hy, gz = p.z() + hz;
          auto acc = rot_coeffs.col((static_cast<long>(k) * ny + j) * nx + i);
          const int i0 = static_cast<int>(std::floor(gx));
          const int j0 = static_cast<int>(std::floor(gy));
          const int k0 = static_cast<int>(std::floor(gz));
          const double fx = gx - i0, fy = gy - j0, fz = gz - k0;
          const auto cr = [](double t, double w[4]) {
            w[0] = 0.5 * (-t * t * t + 2 * t * t - t);
            w[1] = 0.5 * (3 * t * t * t - 5 * t * t + 2);
            w[2] = 0.5 * (-3 * t * t * t + 4 * t * t + t);
            w[3] = 0.5 * (t * t * t - t * t);
          };
          double wx[4], wy[4], wz[4];
          cr(fx, wx);
          cr(fy, wy);
          cr(fz, wz);
          for (int dk = 0; dk < 4; ++dk) {
            const int kk = k0 - 1 + dk;
            if (kk < 0 || kk >= nz || wz[dk] == 0.0) continue;
            for (int dj = 0; dj < 4; ++dj) {
              const int jj = j0 - 1 + dj;
              if (jj < 0 || jj >= ny) continue;
              const double wyz = wy[dj] * wz[dk];
              if (wyz == 0.0) continue;
              for (int di = 0; di < 4; ++di) {
                const int ii = i0 - 1 + di;
                if (ii < 0 || ii >= nx) continue;
                const double w = wx[di] * wyz;
                if (w == 0.0) continue;
                acc += w * coeffs.col((static_cast<long>(kk) * ny + jj) * nx + ii);
              }
            }
          }
        }
      }
    });

    // Synthesize all output directions for all voxels in one product.
    const Eigen::MatrixXd rot_vals = basis * rot_coeffs;  // n_orient x nvox

    const double weight = input.sampling.weights[static_cast<size_t>(cp)] * dv * fft_norm;
    parallel_for(n_orient, [&](int co) {
      std::vector<Complex> rotated(static_cast<size_t>(nvox));
      std::vector<Complex> shifted(static_cast<size_t>(nvox));
      for (long v = 0; v < nvox; ++v) rotated[static_cast<size_t>(v)] = rot_vals(co, v);
      cyclic_shift(rotated.data(), shifted.data(), nx, ny, nz, nx - hx, ny - hy, nz - hz);
      dft3(shifted.data(), nx, ny, nz, false);
      auto& spec = out_spec[static_cast<size_t>(co)];
      const auto& u = u_hat[static_cast<size_t>(cp)];
      for (long v = 0; v < nvox; ++v) {
        spec[static_cast<size_t>(v)] +=
            weight * shifted[static_cast<size_t>(v)] * u[static_cast<size_t>(v)];
      }
    });
  }

  R3S2Field out;
  out.nx = nx;
  out.ny = ny;
  out.nz = nz;
  out.voxel_size = input.voxel_size;
  out.storage = R3S2Field::Storage::Samples;
  out.sampling = input.sampling;
  out.complex_data = false;
  out.allocate();
  parallel_for(n_orient, [&](int co) {
    auto& spec = out_spec[static_cast<size_t>(co)];
    dft3(spec.data(), nx, ny, nz, true);
    const size_t base = out.index(0, 0, 0, co);
    for (long v = 0; v < nvox; ++v) {
      out.real_values[base + static_cast<size_t>(v)] = spec[static_cast<size_t>(v)].real();
    }
  });
  return out;
}

}  // namespace r3s2
