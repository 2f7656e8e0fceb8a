#pragma once

#include <Eigen/Dense>

#include "r3s2/spherical_harmonics.hpp"

namespace r3s2 {

/// Rotation mapping e_z onto omega/|omega|, with columns
/// ((omega x e_z) x omega)/|.|, (omega x e_z)/|.|, omega/|omega|.
/// Degenerate rays: identity for omega || +e_z, rotation by pi about e_x for
/// omega || -e_z; omega = 0 also yields the identity.
Eigen::Matrix3d frequency_frame(const Vec3& omega);

/// Section of S^2 into SO(3): rotation about (e_z x n) by acos(n_z), mapping
/// e_z to n (alpha = 0 chart). Same pole fallbacks as frequency_frame.
Eigen::Matrix3d section_rotation(const Vec3& n);

}  // namespace r3s2
