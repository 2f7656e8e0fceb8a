#pragma once

#include "r3s2/field.hpp"
#include "r3s2/random_walk.hpp"

namespace r3s2 {

struct HistogramSpec {
  int n_half = 16;          ///< voxels -n_half..n_half per axis
  double voxel_size = 0.5;  ///< bin pitch, matched to synthesis by default
  int sphere_refinement = 3;

  int axis_count() const { return 2 * n_half + 1; }
};

/// Bins walk endpoints into a density on the grid times the icosahedral
/// orientation bins, dividing by bin volume and per-vertex solid angle so
/// that the result integrates to 1 over the endpoints that land inside the
/// grid. Endpoints outside the spatial extent are dropped.
R3S2Field bin_endpoints(const RandomWalkBatch& batch, const HistogramSpec& spec);

}  // namespace r3s2
