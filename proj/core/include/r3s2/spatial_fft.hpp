#pragma once

#include "r3s2/field.hpp"
#include "r3s2/frequency_grid.hpp"

namespace r3s2 {

/// In-place unnormalized 3D DFT of x-fastest data (nx*ny*nz complex values);
/// backward = positive exponent.
void dft3(Complex* data, int nx, int ny, int nz, bool backward);

/// Centered inverse DFT of a frequency-domain SH field with physical scaling
/// (spacing/2pi)^3, so a kernel of unit mass stays near unit mass. Enforces
/// Hermitian symmetry first and errors if the violation exceeds 1e-6.
/// Output voxel pitch is 2N/(eta(2N+1)).
R3S2Field inverse_spatial_fft(const R3S2Field& freq, const FrequencyGrid& grid);

}  // namespace r3s2
