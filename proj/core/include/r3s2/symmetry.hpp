#pragma once

#include "r3s2/field.hpp"

namespace r3s2 {

/// Largest deviation from the Hermitian relation that makes the spatial
/// kernel real, c_{l,m}(-w) = (-1)^m conj(c_{l,-m}(w)), relative to the max
/// coefficient amplitude. Frequency-domain SH fields with odd dims only.
double hermitian_violation(const R3S2Field& freq);

/// Symmetrizes the field to satisfy the relation exactly (pairwise average).
void enforce_hermitian(R3S2Field& freq);

struct SymmetryReport {
  double alpha_rotation = 0.0;  ///< relative l2 violation of e_z-rotation symmetry
  double inversion = 0.0;       ///< relative l2 violation of inversion symmetry
};

/// Measures the kernel symmetries on a spatial SH-storage field with odd,
/// equal dims: (a) invariance under the exact 90-degree grid rotation about
/// e_z, (b) K(y,n) = K(-R_n^T y, R_n^T e_z) via trilinear interpolation.
SymmetryReport verify_symmetries(const R3S2Field& spatial);

}  // namespace r3s2
