#include "r3s2/field.hpp"

#include <cmath>
#include <stdexcept>

#include "r3s2/sphere_transform.hpp"

namespace r3s2 {

SphCoeffField R3S2Field::coeffs_at(int i, int j, int k) const {
  if (storage != Storage::SH) throw std::logic_error("coeffs_at: not SH storage");
  SphCoeffField c(lmax);
  const int nc = n_channels();
  if (complex_data) {
    for (int ch = 0; ch < nc; ++ch) c.values[static_cast<size_t>(ch)] = cplx_at(i, j, k, ch);
  } else {
    for (int ch = 0; ch < nc; ++ch) c.values[static_cast<size_t>(ch)] = real_at(i, j, k, ch);
  }
  return c;
}

R3S2Field sh_to_samples(const R3S2Field& field, const OrientationSampling& sampling,
                        double* imag_residue) {
  if (field.storage != R3S2Field::Storage::SH) {
    throw std::invalid_argument("sh_to_samples: input must be SH storage");
  }
  R3S2Field out;
  out.nx = field.nx;
  out.ny = field.ny;
  out.nz = field.nz;
  out.voxel_size = field.voxel_size;
  out.storage = R3S2Field::Storage::Samples;
  out.sampling = sampling;
  out.frequency_domain = field.frequency_domain;
  out.complex_data = false;
  out.allocate();

  // Precompute the synthesis matrix rows once.
  const int nc = field.n_channels();
  Eigen::MatrixXcd basis(sampling.size(), nc);
  for (int d = 0; d < sampling.size(); ++d) {
    const auto row = sh_basis_row(field.lmax, sampling.directions[static_cast<size_t>(d)]);
    for (int ch = 0; ch < nc; ++ch) basis(d, ch) = row[static_cast<size_t>(ch)];
  }

  double max_amp = 0.0, max_imag = 0.0;
  Eigen::VectorXcd c(nc);
  for (int k = 0; k < field.nz; ++k) {
    for (int j = 0; j < field.ny; ++j) {
      for (int i = 0; i < field.nx; ++i) {
        for (int ch = 0; ch < nc; ++ch) {
          c(ch) = field.complex_data ? field.cplx_at(i, j, k, ch)
                                     : Complex(field.real_at(i, j, k, ch), 0.0);
        }
        const Eigen::VectorXcd vals = basis * c;
        for (int d = 0; d < sampling.size(); ++d) {
          out.real_at(i, j, k, d) = vals(d).real();
          max_amp = std::max(max_amp, std::abs(vals(d).real()));
          max_imag = std::max(max_imag, std::abs(vals(d).imag()));
        }
      }
    }
  }
  if (imag_residue) *imag_residue = max_amp > 0.0 ? max_imag / max_amp : 0.0;
  return out;
}

double field_mass(const R3S2Field& field) {
  if (field.storage != R3S2Field::Storage::Samples || field.complex_data) {
    throw std::invalid_argument("field_mass: needs real samples storage");
  }
  const double dv = field.voxel_size * field.voxel_size * field.voxel_size;
  double mass = 0.0;
  for (int c = 0; c < field.n_channels(); ++c) {
    double channel = 0.0;
    const size_t base = field.index(0, 0, 0, c);
    const size_t n = static_cast<size_t>(field.n_voxels());
    for (size_t i = 0; i < n; ++i) channel += field.real_values[base + i];
    mass += channel * field.sampling.weights[static_cast<size_t>(c)];
  }
  return mass * dv;
}

}  // namespace r3s2
