#include "r3s2/glyphs.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace r3s2 {

long write_glyphs_obj(const R3S2Field& field, const std::string& path,
                      const GlyphOptions& options) {
  if (field.storage != R3S2Field::Storage::Samples || field.complex_data) {
    throw std::invalid_argument("write_glyphs_obj: needs real samples-storage field");
  }
  if (field.sampling.triangles.empty()) {
    throw std::invalid_argument("write_glyphs_obj: sampling has no tessellation");
  }
  if (options.spacing < 1 || !(options.scale > 0.0)) {
    throw std::invalid_argument("write_glyphs_obj: invalid options");
  }
  double max_val = 0.0;
  for (double v : field.real_values) max_val = std::max(max_val, std::abs(v));
  if (max_val == 0.0) throw std::invalid_argument("write_glyphs_obj: field is empty");

  // Radius cap: half the distance between neighboring glyph centers.
  const double nu = options.scale * 0.5 * options.spacing * field.voxel_size / max_val;

  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("write_glyphs_obj: cannot open " + path);
  out.precision(9);

  const int hx = field.nx / 2, hy = field.ny / 2, hz = field.nz / 2;
  long glyphs = 0;
  long vertex_base = 1;  // OBJ indices are 1-based
  for (int k = 0; k < field.nz; k += options.spacing) {
    for (int j = 0; j < field.ny; j += options.spacing) {
      for (int i = 0; i < field.nx; i += options.spacing) {
        const Vec3 center((i - hx) * field.voxel_size, (j - hy) * field.voxel_size,
                          (k - hz) * field.voxel_size);
        out << "o glyph_" << i << "_" << j << "_" << k << "\n";
        for (int c = 0; c < field.sampling.size(); ++c) {
          const Vec3 v = center + nu * field.real_at(i, j, k, c) *
                                      field.sampling.directions[static_cast<size_t>(c)];
          out << "v " << v.x() << " " << v.y() << " " << v.z() << "\n";
        }
        for (const auto& tri : field.sampling.triangles) {
          out << "f " << vertex_base + tri[0] << " " << vertex_base + tri[1] << " "
              << vertex_base + tri[2] << "\n";
        }
        vertex_base += field.sampling.size();
        ++glyphs;
      }
    }
  }
  if (!out) throw std::runtime_error("write_glyphs_obj: write failed for " + path);
  return glyphs;
}

}  // namespace r3s2
