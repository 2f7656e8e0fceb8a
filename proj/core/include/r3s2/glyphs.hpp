#pragma once

#include <string>

#include "r3s2/field.hpp"

namespace r3s2 {

struct GlyphOptions {
  int spacing = 1;     ///< voxel stride between glyphs
  double scale = 1.0;  ///< extra user scaling on top of the auto radius
};

/// Writes the glyph field {y + nu U(y,n) n} of a real samples-storage field
/// as an OBJ triangle mesh, one object group per voxel. nu is chosen so the
/// largest glyph radius stays below half the glyph spacing (no
/// intersections), then multiplied by options.scale.
/// Returns the number of glyphs written.
long write_glyphs_obj(const R3S2Field& field, const std::string& path,
                      const GlyphOptions& options = {});

}  // namespace r3s2
