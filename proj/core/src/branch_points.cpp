#include "r3s2/branch_points.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "r3s2/eigensystem.hpp"

namespace r3s2 {

namespace {

int complex_count(int m, double rho, int lmax) {
  const SpheroidalEigensystem es = gswe_eigensystem(m, rho, lmax);
  int n = 0;
  for (bool real : es.is_real) {
    if (!real) ++n;
  }
  return n;
}

}  // namespace

BranchPointList detect_branch_points(int m, double rho_max, double resolution, int lmax) {
  if (!(rho_max > std::abs(m) + 1)) {
    throw std::invalid_argument("detect_branch_points: rho_max must exceed |m|+1");
  }
  if (!(resolution > 0.0)) {
    throw std::invalid_argument("detect_branch_points: resolution must be positive");
  }
  if (lmax == 0) lmax = std::abs(m) + 16;

  BranchPointList out;
  out.m = m;
  out.scan_resolution = resolution;

  const double step = std::min(0.05, std::max(resolution, rho_max / 4000.0));
  double a = 0.0;
  int count_a = complex_count(m, a, lmax);
  while (a < rho_max) {
    const double b = std::min(a + step, rho_max);
    const int count_b = complex_count(m, b, lmax);
    if (count_b != count_a) {
      // Bisect on the count change; nested changes inside one step are rare
      // at this scan resolution and would merge into one reported point.
      double lo = a, hi = b;
      int count_lo = count_a;
      while (hi - lo > resolution) {
        const double mid = 0.5 * (lo + hi);
        if (complex_count(m, mid, lmax) != count_lo) {
          hi = mid;
        } else {
          lo = mid;
          count_lo = complex_count(m, lo, lmax);
        }
      }
      out.points.push_back(0.5 * (lo + hi));
    }
    a = b;
    count_a = count_b;
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

}  // namespace r3s2
