#pragma once

#include "r3s2/field.hpp"
#include "r3s2/frequency_grid.hpp"
#include "r3s2/propagators.hpp"

namespace r3s2 {

/// Frequency-domain kernel: per frequency, the band-limited delta at e_z is
/// evolved in the reoriented basis (block-diagonal in m) and rotated back to
/// the fixed SH basis. Output is a frequency-domain SH field on the grid.
R3S2Field compute_kernel(const FrequencyGrid& grid, const ProcessParams& p, int lmax,
                         EvolutionOp op = EvolutionOp::Evolve);

/// compute_kernel + Hermitian symmetrization + centered inverse DFT.
R3S2Field compute_spatial_kernel(const FrequencyGrid& grid, const ProcessParams& p, int lmax,
                                 EvolutionOp op = EvolutionOp::Evolve);

/// k-fold resolvent kernel (Gamma-distributed traveling time), spatial domain.
R3S2Field gamma_kernel(const FrequencyGrid& grid, const ProcessParams& p, int lmax);

}  // namespace r3s2
