#pragma once

#include "r3s2/spherical_harmonics.hpp"

namespace r3s2 {

/// Centered cubic frequency grid: (2N+1)^3 samples omega_ijk with axis values
/// i * eta * pi / N for i in -N..N.
struct FrequencyGrid {
  int n_half = 1;  ///< N
  int eta = 1;

  int axis_count() const { return 2 * n_half + 1; }
  long total() const {
    const long n = axis_count();
    return n * n * n;
  }
  double spacing() const;
  /// Axis sample for storage index i in [0, 2N], i.e. (i - N) * spacing.
  double axis_value(int i) const { return (i - n_half) * spacing(); }
  Vec3 omega(int i, int j, int k) const {
    return {axis_value(i), axis_value(j), axis_value(k)};
  }
  /// Conjugate spatial pitch of the centered DFT: 2N / (eta (2N+1)).
  double voxel_pitch() const;
};

FrequencyGrid make_grid(int n_half, int eta);

}  // namespace r3s2
