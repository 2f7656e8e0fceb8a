#pragma once

#include <vector>

namespace r3s2 {

/// Parameter values rho^m_n where a pair of GSWE eigenvalues collides and
/// branches into a complex conjugate pair. All points lie above the
/// guaranteed-real bound rho_* = |m| + 1.
struct BranchPointList {
  int m = 0;
  std::vector<double> points;  ///< ascending
  double scan_resolution = 0.0;
};

/// Scans rho in [0, rho_max] for changes in the number of non-real GSWE
/// eigenvalues and refines each bracket by bisection down to `resolution`.
BranchPointList detect_branch_points(int m, double rho_max, double resolution, int lmax = 0);

}  // namespace r3s2
