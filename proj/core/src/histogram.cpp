#include "r3s2/histogram.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace r3s2 {

R3S2Field bin_endpoints(const RandomWalkBatch& batch, const HistogramSpec& spec) {
  if (batch.endpoints.empty()) {
    throw std::invalid_argument("bin_endpoints: empty batch");
  }
  if (spec.n_half < 0 || !(spec.voxel_size > 0.0)) {
    throw std::invalid_argument("bin_endpoints: invalid spec");
  }
  R3S2Field out;
  out.nx = out.ny = out.nz = spec.axis_count();
  out.voxel_size = spec.voxel_size;
  out.storage = R3S2Field::Storage::Samples;
  out.sampling = icosphere_sampling(spec.sphere_refinement);
  out.complex_data = false;
  out.allocate();

  auto bin_axis = [&](double v) {
    return static_cast<int>(std::lround(v / spec.voxel_size)) + spec.n_half;
  };
  long inside = 0;
  std::vector<long> counts(out.real_values.size(), 0);
  for (const Endpoint& e : batch.endpoints) {
    const int i = bin_axis(e.y.x()), j = bin_axis(e.y.y()), k = bin_axis(e.y.z());
    if (i < 0 || j < 0 || k < 0 || i >= out.nx || j >= out.ny || k >= out.nz) continue;
    const int c = out.sampling.nearest(e.n);
    ++counts[out.index(i, j, k, c)];
    ++inside;
  }
  if (inside == 0) throw std::runtime_error("bin_endpoints: all endpoints outside the grid");

  const double dv = std::pow(spec.voxel_size, 3);
  for (int c = 0; c < out.n_channels(); ++c) {
    // Solid-angle correction: vertex bins cover unequal areas on the sphere.
    const double norm = 1.0 / (static_cast<double>(inside) * dv *
                               out.sampling.weights[static_cast<size_t>(c)]);
    const size_t base = out.index(0, 0, 0, c);
    const size_t n = static_cast<size_t>(out.n_voxels());
    for (size_t i = 0; i < n; ++i) {
      out.real_values[base + i] = static_cast<double>(counts[base + i]) * norm;
    }
  }
  return out;
}

}  // namespace r3s2
