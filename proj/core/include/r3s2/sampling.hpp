#pragma once

#include <array>
#include <vector>

#include "r3s2/spherical_harmonics.hpp"

namespace r3s2 {

/// Directions on S^2 with quadrature weights (steradian, summing to 4 pi).
struct OrientationSampling {
  std::vector<Vec3> directions;
  std::vector<double> weights;
  std::vector<std::array<int, 3>> triangles;  // tessellation, for glyph meshes

  int size() const { return static_cast<int>(directions.size()); }

  /// Index of the direction closest to n.
  int nearest(const Vec3& n) const;
};

/// Icosahedral tessellation refined `refinement` times (each step splits a
/// triangle in four). refinement = 3 gives 642 vertices. Weights are the
/// spherical triangle areas shared equally among the three corners.
OrientationSampling icosphere_sampling(int refinement);

/// Spherical excess (area) of the triangle with unit-vector corners a,b,c.
double spherical_triangle_area(const Vec3& a, const Vec3& b, const Vec3& c);

}  // namespace r3s2
