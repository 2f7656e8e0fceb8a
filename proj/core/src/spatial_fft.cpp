#include "r3s2/spatial_fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "r3s2/symmetry.hpp"

namespace r3s2 {

namespace {

std::mutex fftw_plan_mutex;  // FFTW planning is not thread-safe

/// Cyclic shift moving the centered origin (N,N,N) to index (0,0,0) and back.
void shift3(const Complex* in, Complex* out, int nx, int ny, int nz, int sx, int sy, int sz) {
  for (int k = 0; k < nz; ++k) {
    const int kk = (k + sz) % nz;
    for (int j = 0; j < ny; ++j) {
      const int jj = (j + sy) % ny;
      for (int i = 0; i < nx; ++i) {
        const int ii = (i + sx) % nx;
        out[(static_cast<long>(kk) * ny + jj) * nx + ii] =
            in[(static_cast<long>(k) * ny + j) * nx + i];
      }
    }
  }
}

}  // namespace

void dft3(Complex* data, int nx, int ny, int nz, bool backward) {
  fftw_complex* buf = reinterpret_cast<fftw_complex*>(data);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex);
    // FFTW's fastest-varying dimension is the last one; our x is fastest.
    plan = fftw_plan_dft_3d(nz, ny, nx, buf, buf,
                            backward ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE);
  }
  if (!plan) throw std::runtime_error("dft3: fftw plan creation failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex);
    fftw_destroy_plan(plan);
  }
}

R3S2Field inverse_spatial_fft(const R3S2Field& freq, const FrequencyGrid& grid) {
  if (freq.storage != R3S2Field::Storage::SH || !freq.complex_data || !freq.frequency_domain) {
    throw std::invalid_argument("inverse_spatial_fft: needs complex frequency SH field");
  }
  const int n = grid.axis_count();
  if (freq.nx != n || freq.ny != n || freq.nz != n) {
    throw std::invalid_argument("inverse_spatial_fft: field dims do not match grid");
  }
  const double violation = hermitian_violation(freq);
  if (violation > 1e-6) {
    throw std::runtime_error("inverse_spatial_fft: Hermitian symmetry violation " +
                             std::to_string(violation));
  }
  R3S2Field work = freq;
  enforce_hermitian(work);

  R3S2Field out;
  out.nx = out.ny = out.nz = n;
  out.voxel_size = grid.voxel_pitch();
  out.storage = R3S2Field::Storage::SH;
  out.lmax = freq.lmax;
  out.frequency_domain = false;
  out.complex_data = true;
  out.allocate();

  const double scale = std::pow(grid.spacing() / (2.0 * M_PI), 3);
  const long nvox = work.n_voxels();
  std::vector<Complex> buf(static_cast<size_t>(nvox));
  const int half = grid.n_half;
  for (int c = 0; c < work.n_channels(); ++c) {
    Complex* chan = work.cplx_values.data() + work.index(0, 0, 0, c);
    // ifftshift -> DFT -> fftshift gives the centered transform
    // sum_i F_i exp(+2 pi i (i-N)(a-N)/(2N+1)).
    shift3(chan, buf.data(), n, n, n, n - half, n - half, n - half);
    dft3(buf.data(), n, n, n, /*backward=*/true);
    shift3(buf.data(), out.cplx_values.data() + out.index(0, 0, 0, c), n, n, n, half, half,
           half);
    Complex* o = out.cplx_values.data() + out.index(0, 0, 0, c);
    for (long i = 0; i < nvox; ++i) o[static_cast<size_t>(i)] *= scale;
  }
  return out;
}

}  // namespace r3s2
