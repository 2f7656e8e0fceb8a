#pragma once

#include <vector>

#include "r3s2/coeffs.hpp"
#include "r3s2/sampling.hpp"

namespace r3s2 {

/// Sampled field on a cubic spatial grid times S^2. The orientation dimension
/// is stored either as values at sampled directions or as SH coefficients.
/// Layout: x fastest, then y, z, orientation channel slowest.
struct R3S2Field {
  enum class Storage { Samples, SH };

  int nx = 0, ny = 0, nz = 0;
  double voxel_size = 1.0;  ///< grid pitch (spatial) or frequency spacing
  Storage storage = Storage::Samples;
  int lmax = 0;                  ///< valid when storage == SH
  OrientationSampling sampling;  ///< valid when storage == Samples
  bool frequency_domain = false;

  bool complex_data = false;
  std::vector<double> real_values;
  std::vector<Complex> cplx_values;

  int n_channels() const {
    return storage == Storage::SH ? SHIndex::count(lmax) : sampling.size();
  }
  long n_voxels() const { return static_cast<long>(nx) * ny * nz; }
  size_t index(int i, int j, int k, int c) const {
    return static_cast<size_t>(((static_cast<long>(c) * nz + k) * ny + j) * nx + i);
  }
  double& real_at(int i, int j, int k, int c) { return real_values[index(i, j, k, c)]; }
  double real_at(int i, int j, int k, int c) const { return real_values[index(i, j, k, c)]; }
  Complex& cplx_at(int i, int j, int k, int c) { return cplx_values[index(i, j, k, c)]; }
  const Complex& cplx_at(int i, int j, int k, int c) const {
    return cplx_values[index(i, j, k, c)];
  }

  void allocate() {
    const size_t n = static_cast<size_t>(n_voxels()) * static_cast<size_t>(n_channels());
    if (complex_data) {
      cplx_values.assign(n, Complex{0.0, 0.0});
      real_values.clear();
    } else {
      real_values.assign(n, 0.0);
      cplx_values.clear();
    }
  }

  /// SH coefficients of one voxel (SH storage only).
  SphCoeffField coeffs_at(int i, int j, int k) const;
};

/// Converts an SH-storage spatial field to direction samples (real part),
/// reporting the largest imaginary residue relative to the max amplitude.
R3S2Field sh_to_samples(const R3S2Field& field, const OrientationSampling& sampling,
                        double* imag_residue = nullptr);

/// Integral of the field over R^3 x S^2 using voxel volumes and orientation
/// quadrature weights (samples storage).
double field_mass(const R3S2Field& field);

}  // namespace r3s2
