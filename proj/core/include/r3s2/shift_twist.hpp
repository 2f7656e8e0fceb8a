#pragma once

#include "r3s2/field.hpp"

namespace r3s2 {

/// Shift-twist convolution on R^3 x S^2:
///   out(y,n) = sum_{y',n'} K(R_{n'}^T (y - y'), R_{n'}^T n) U(y',n') w_{n'} dV.
/// Kernel and input must be real samples-storage fields with identical
/// orientation samplings and voxel pitch; the kernel may be smaller and is
/// zero-padded. The spatial part runs as circular FFT convolution; rotated
/// kernels are evaluated through a per-voxel SH fit of order `lmax`.
R3S2Field shift_twist_convolve(const R3S2Field& kernel, const R3S2Field& input, int lmax = 8);

}  // namespace r3s2
