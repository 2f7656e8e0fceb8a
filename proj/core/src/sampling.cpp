#include "r3s2/sampling.hpp"

#include <Eigen/Geometry>
#include <cmath>
#include <cstdint>
#include <map>
#include <utility>

namespace r3s2 {

int OrientationSampling::nearest(const Vec3& n) const {
  int best = 0;
  double best_dot = -2.0;
  for (int i = 0; i < size(); ++i) {
    const double d = directions[static_cast<size_t>(i)].dot(n);
    if (d > best_dot) {
      best_dot = d;
      best = i;
    }
  }
  return best;
}

double spherical_triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  // Van Oosterom & Strackee: tan(E/2) = |a.(b x c)| / (1 + a.b + b.c + c.a)
  const double num = std::abs(a.dot(b.cross(c)));
  const double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(num, den);
}

OrientationSampling icosphere_sampling(int refinement) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts = {
      {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
  for (auto& v : verts) v.normalize();
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  for (int r = 0; r < refinement; ++r) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int i, int j) {
      const auto key = std::minmax(i, j);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      Vec3 v = (verts[static_cast<size_t>(i)] + verts[static_cast<size_t>(j)]).normalized();
      verts.push_back(v);
      const int idx = static_cast<int>(verts.size()) - 1;
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const int a = mid(f[0], f[1]), b = mid(f[1], f[2]), c = mid(f[2], f[0]);
      next.push_back({f[0], a, c});
      next.push_back({f[1], b, a});
      next.push_back({f[2], c, b});
      next.push_back({a, b, c});
    }
    faces = std::move(next);
  }

  OrientationSampling s;
  s.directions = std::move(verts);
  s.triangles = std::move(faces);
  s.weights.assign(s.directions.size(), 0.0);
  for (const auto& f : s.triangles) {
    const double area = spherical_triangle_area(s.directions[static_cast<size_t>(f[0])],
                                                s.directions[static_cast<size_t>(f[1])],
                                                s.directions[static_cast<size_t>(f[2])]);
    for (int k = 0; k < 3; ++k) s.weights[static_cast<size_t>(f[k])] += area / 3.0;
  }
  return s;
}

}  // namespace r3s2
