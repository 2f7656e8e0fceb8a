#include "r3s2/symmetry.hpp"

#include <cmath>
#include <stdexcept>

#include "r3s2/reorientation.hpp"
#include "r3s2/spatial_fft.hpp"
#include "r3s2/sphere_transform.hpp"
#include "r3s2/wigner.hpp"

namespace r3s2 {

namespace {

void require_freq_sh(const R3S2Field& f) {
  if (f.storage != R3S2Field::Storage::SH || !f.complex_data || !f.frequency_domain) {
    throw std::invalid_argument("hermitian symmetry: needs complex frequency SH field");
  }
  if (f.nx % 2 == 0 || f.ny % 2 == 0 || f.nz % 2 == 0) {
    throw std::invalid_argument("hermitian symmetry: dims must be odd (centered grid)");
  }
}

double parity(int m) { return (m & 1) ? -1.0 : 1.0; }

}  // namespace

double hermitian_violation(const R3S2Field& f) {
  require_freq_sh(f);
  double max_amp = 0.0;
  for (const Complex& v : f.cplx_values) max_amp = std::max(max_amp, std::abs(v));
  if (max_amp == 0.0) return 0.0;
  double worst = 0.0;
  for (int l = 0; l <= f.lmax; ++l) {
    for (int m = -l; m <= l; ++m) {
      const int c1 = SHIndex{l, m}.flat();
      const int c2 = SHIndex{l, -m}.flat();
      for (int k = 0; k < f.nz; ++k) {
        for (int j = 0; j < f.ny; ++j) {
          for (int i = 0; i < f.nx; ++i) {
            const Complex a = f.cplx_at(f.nx - 1 - i, f.ny - 1 - j, f.nz - 1 - k, c1);
            const Complex b = parity(m) * std::conj(f.cplx_at(i, j, k, c2));
            worst = std::max(worst, std::abs(a - b));
          }
        }
      }
    }
  }
  return worst / max_amp;
}

void enforce_hermitian(R3S2Field& f) {
  require_freq_sh(f);
  for (int l = 0; l <= f.lmax; ++l) {
    for (int m = 0; m <= l; ++m) {
      const int cp = SHIndex{l, m}.flat();
      const int cm = SHIndex{l, -m}.flat();
      for (int k = 0; k < f.nz; ++k) {
        for (int j = 0; j < f.ny; ++j) {
          for (int i = 0; i < f.nx; ++i) {
            const int ii = f.nx - 1 - i, jj = f.ny - 1 - j, kk = f.nz - 1 - k;
            // Pair c_{l,m}(-w) with conj(c_{l,-m}(w)); touch each pair once.
            const long flat_v = (static_cast<long>(k) * f.ny + j) * f.nx + i;
            const long flat_w = (static_cast<long>(kk) * f.ny + jj) * f.nx + ii;
            if (flat_v > flat_w) continue;
            const Complex s =
                0.5 * (f.cplx_at(ii, jj, kk, cp) + parity(m) * std::conj(f.cplx_at(i, j, k, cm)));
            f.cplx_at(ii, jj, kk, cp) = s;
            f.cplx_at(i, j, k, cm) = parity(m) * std::conj(s);
            if (m > 0) {
              const Complex t = 0.5 * (f.cplx_at(ii, jj, kk, cm) +
                                       parity(m) * std::conj(f.cplx_at(i, j, k, cp)));
              f.cplx_at(ii, jj, kk, cm) = t;
              f.cplx_at(i, j, k, cp) = parity(m) * std::conj(t);
            }
          }
        }
      }
    }
  }
}

namespace {

void catmull_rom(double t, double w[4]) {
  w[0] = 0.5 * (-t * t * t + 2.0 * t * t - t);
  w[1] = 0.5 * (3.0 * t * t * t - 5.0 * t * t + 2.0);
  w[2] = 0.5 * (-3.0 * t * t * t + 4.0 * t * t + t);
  w[3] = 0.5 * (t * t * t - t * t);
}

/// Tricubic Catmull-Rom interpolation on a cyclic scalar grid of period m.
Complex tricubic_cyclic(const std::vector<Complex>& data, long m, double gx, double gy,
                        double gz) {
  const int i0 = static_cast<int>(std::floor(gx));
  const int j0 = static_cast<int>(std::floor(gy));
  const int k0 = static_cast<int>(std::floor(gz));
  double wx[4], wy[4], wz[4];
  catmull_rom(gx - i0, wx);
  catmull_rom(gy - j0, wy);
  catmull_rom(gz - k0, wz);
  const auto wrap = [m](long v) { return ((v % m) + m) % m; };
  Complex acc{0.0, 0.0};
  for (int dk = -1; dk <= 2; ++dk) {
    const long k = wrap(k0 + dk);
    for (int dj = -1; dj <= 2; ++dj) {
      const long j = wrap(j0 + dj);
      const double wjk = wy[dj + 1] * wz[dk + 1];
      for (int di = -1; di <= 2; ++di) {
        acc += (wx[di + 1] * wjk) * data[(k * m + j) * m + wrap(i0 + di)];
      }
    }
  }
  return acc;
}

}  // namespace

SymmetryReport verify_symmetries(const R3S2Field& f) {
  if (f.storage != R3S2Field::Storage::SH || !f.complex_data || f.frequency_domain) {
    throw std::invalid_argument("verify_symmetries: needs complex spatial SH field");
  }
  if (f.nx != f.ny || f.ny != f.nz || f.nx % 2 == 0) {
    throw std::invalid_argument("verify_symmetries: needs odd cubic dims");
  }
  const int n = f.nx;
  const int h = n / 2;
  SymmetryReport rep;

  // (a) quarter turn about e_z: exact on the grid, so only SH rotation error
  // enters. K(R y, n) should equal wigner_rotate(K(y, .), R) evaluated at n.
  {
    Eigen::Matrix3d R;
    R << 0, -1, 0, 1, 0, 0, 0, 0, 1;
    const WignerD D(R, f.lmax);
    double num = 0.0, den = 0.0;
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          // (x,y) -> (-y,x) in centered indices
          const int ri = h - (j - h), rj = h + (i - h);
          const SphCoeffField rot = D.rotate(f.coeffs_at(i, j, k));
          for (int c = 0; c < f.n_channels(); ++c) {
            const Complex d = f.cplx_at(ri, rj, k, c) - rot.values[static_cast<size_t>(c)];
            num += std::norm(d);
            den += std::norm(f.cplx_at(i, j, k, c));
          }
        }
      }
    }
    rep.alpha_rotation = den > 0.0 ? std::sqrt(num / den) : 0.0;
  }

  // (b) inversion symmetry K(y,n) = K(-R_n^T y, R_n^T e_z), sampled on a
  // direction set and a voxel stride. The rotated point -R_n^T y falls off
  // the lattice, and the kernel is critically sampled (band-limited up to
  // the grid Nyquist), so local polynomial interpolation alone cannot reach
  // the symmetry floor. Instead, for each probe direction the SH channels
  // are folded into one scalar volume, upsampled exactly by frequency
  // zero-padding (the trigonometric interpolant of the DFT synthesis), and
  // only then resampled with a tricubic kernel on the oversampled grid.
  {
    const OrientationSampling dirs = icosphere_sampling(1);
    const int stride = std::max(1, n / 16);
    const int u = n <= 40 ? 4 : 2;  // oversampling factor, memory-bounded
    const long m = static_cast<long>(u) * n;
    const double total = static_cast<double>(n) * n * n;
    std::vector<Complex> fold(static_cast<size_t>(n) * n * n);
    std::vector<Complex> fine(static_cast<size_t>(m) * m * m);
    const auto embed = [&](int idx) {
      const long s = idx <= h ? idx : idx - n;
      return (s + m) % m;
    };
    double num = 0.0, den = 0.0;
    for (const Vec3& dir : dirs.directions) {
      const Eigen::Matrix3d Rn = section_rotation(dir);
      const Vec3 n2 = Rn.transpose() * Vec3::UnitZ();
      const auto row1 = sh_basis_row(f.lmax, dir);
      const auto row2 = sh_basis_row(f.lmax, n2);
      // Fold channels at n2, with the origin voxel moved to index 0.
      for (int r = 0; r < n; ++r) {
        for (int q = 0; q < n; ++q) {
          for (int p = 0; p < n; ++p) {
            const int i = (p + h) % n, j = (q + h) % n, k = (r + h) % n;
            Complex acc{0.0, 0.0};
            for (int c = 0; c < f.n_channels(); ++c) {
              acc += f.cplx_at(i, j, k, c) * row2[static_cast<size_t>(c)];
            }
            fold[(static_cast<size_t>(r) * n + q) * n + p] = acc;
          }
        }
      }
      dft3(fold.data(), n, n, n, false);
      std::fill(fine.begin(), fine.end(), Complex{0.0, 0.0});
      for (int r = 0; r < n; ++r) {
        for (int q = 0; q < n; ++q) {
          for (int p = 0; p < n; ++p) {
            fine[(embed(r) * m + embed(q)) * m + embed(p)] =
                fold[(static_cast<size_t>(r) * n + q) * n + p];
          }
        }
      }
      dft3(fine.data(), static_cast<int>(m), static_cast<int>(m), static_cast<int>(m), true);

      for (int k = 0; k < n; k += stride) {
        for (int j = 0; j < n; j += stride) {
          for (int i = 0; i < n; i += stride) {
            const Vec3 y((i - h) * f.voxel_size, (j - h) * f.voxel_size,
                         (k - h) * f.voxel_size);
            const Vec3 y2 = -(Rn.transpose() * y);
            const double gx = y2.x() / f.voxel_size + h;
            const double gy = y2.y() / f.voxel_size + h;
            const double gz = y2.z() / f.voxel_size + h;
            if (gx < 0 || gy < 0 || gz < 0 || gx > n - 1 || gy > n - 1 || gz > n - 1)
              continue;
            Complex acc{0.0, 0.0};
            const SphCoeffField c = f.coeffs_at(i, j, k);
            for (size_t ch = 0; ch < row1.size(); ++ch) acc += c.values[ch] * row1[ch];
            const double v1 = acc.real();
            const double v2 =
                tricubic_cyclic(fine, m, u * (y2.x() / f.voxel_size),
                                u * (y2.y() / f.voxel_size), u * (y2.z() / f.voxel_size))
                    .real() /
                total;
            num += (v1 - v2) * (v1 - v2);
            den += v1 * v1;
          }
        }
      }
    }
    rep.inversion = den > 0.0 ? std::sqrt(num / den) : 0.0;
  }
  return rep;
}

}  // namespace r3s2
