#include "r3s2/frequency_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace r3s2 {

double FrequencyGrid::spacing() const { return eta * M_PI / n_half; }

double FrequencyGrid::voxel_pitch() const {
  return 2.0 * n_half / (static_cast<double>(eta) * axis_count());
}

FrequencyGrid make_grid(int n_half, int eta) {
  if (n_half < 1 || eta < 1) {
    throw std::invalid_argument("make_grid: n_half and eta must be >= 1");
  }
  return FrequencyGrid{n_half, eta};
}

}  // namespace r3s2
