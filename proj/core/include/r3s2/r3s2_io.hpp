#pragma once

#include <string>

#include "r3s2/field.hpp"

namespace r3s2 {

/// ".r3s2" container: magic "R3S2", u32 version=1, u32 nx,ny,nz,
/// f64 voxel_size, u32 n_orient, u8 storage (0 = orientation samples,
/// 1 = SH coefficients followed by u32 lmax), orientation table of 3 x f64
/// unit vectors (storage 0 only), then the payload as little-endian f64
/// (storage 0) or interleaved f64 re/im pairs (storage 1), x-fastest.
void save_field(const R3S2Field& field, const std::string& path);

R3S2Field load_field(const std::string& path);

}  // namespace r3s2
