#include "r3s2/r3s2_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace r3s2 {

namespace {

constexpr char kMagic[4] = {'R', '3', 'S', '2'};
constexpr std::uint32_t kVersion = 1;

[[noreturn]] void fail(const std::string& what, std::uint64_t offset) {
  std::ostringstream os;
  os << "r3s2 file error at byte " << offset << ": " << what;
  throw std::runtime_error(os.str());
}

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}
  std::uint64_t offset() const { return offset_; }

  void bytes(void* dst, size_t n, const char* what) {
    in_.read(static_cast<char*>(dst), static_cast<std::streamsize>(n));
    if (static_cast<size_t>(in_.gcount()) != n) {
      fail(std::string("truncated file, ") +
               std::to_string(n - static_cast<size_t>(in_.gcount())) + " bytes missing for " +
               what,
           offset_);
    }
    offset_ += n;
  }
  template <typename T>
  T scalar(const char* what) {
    T v;
    bytes(&v, sizeof(T), what);
    return v;
  }

 private:
  std::istream& in_;
  std::uint64_t offset_ = 0;
};

void restore_sampling(R3S2Field& f, const std::vector<Vec3>& dirs) {
  // Recognize the icosahedral samplings we write ourselves so that weights
  // and triangles survive the round trip; otherwise fall back to uniform
  // weights with no tessellation.
  for (int refinement = 0; refinement <= 4; ++refinement) {
    OrientationSampling s = icosphere_sampling(refinement);
    if (s.directions.size() != dirs.size()) continue;
    bool match = true;
    for (size_t i = 0; i < dirs.size() && match; ++i) {
      match = (s.directions[i] - dirs[i]).norm() < 1e-9;
    }
    if (match) {
      f.sampling = std::move(s);
      return;
    }
  }
  f.sampling.directions = dirs;
  f.sampling.weights.assign(dirs.size(), 4.0 * M_PI / static_cast<double>(dirs.size()));
  f.sampling.triangles.clear();
}

}  // namespace

void save_field(const R3S2Field& field, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("save_field: cannot open " + path);
  auto put = [&](const void* p, size_t n) {
    out.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
  };
  put(kMagic, 4);
  const std::uint32_t version = kVersion;
  put(&version, 4);
  const std::uint32_t nx = static_cast<std::uint32_t>(field.nx);
  const std::uint32_t ny = static_cast<std::uint32_t>(field.ny);
  const std::uint32_t nz = static_cast<std::uint32_t>(field.nz);
  put(&nx, 4);
  put(&ny, 4);
  put(&nz, 4);
  put(&field.voxel_size, 8);
  const std::uint32_t n_orient = static_cast<std::uint32_t>(field.n_channels());
  put(&n_orient, 4);
  const std::uint8_t storage = field.storage == R3S2Field::Storage::SH ? 1 : 0;
  put(&storage, 1);
  if (storage == 1) {
    const std::uint32_t lmax = static_cast<std::uint32_t>(field.lmax);
    put(&lmax, 4);
    if (!field.complex_data) throw std::logic_error("save_field: SH storage must be complex");
    put(field.cplx_values.data(), field.cplx_values.size() * sizeof(Complex));
  } else {
    if (field.complex_data) throw std::logic_error("save_field: samples storage must be real");
    for (const Vec3& d : field.sampling.directions) put(d.data(), 24);
    put(field.real_values.data(), field.real_values.size() * sizeof(double));
  }
  if (!out) throw std::runtime_error("save_field: write failed for " + path);
}

R3S2Field load_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_field: cannot open " + path);
  Reader r(in);

  char magic[4];
  r.bytes(magic, 4, "magic");
  if (std::memcmp(magic, kMagic, 4) != 0) fail("bad magic, expected \"R3S2\"", 0);
  const auto version = r.scalar<std::uint32_t>("version");
  if (version != kVersion) {
    fail("unsupported version " + std::to_string(version), r.offset() - 4);
  }
  R3S2Field f;
  f.nx = static_cast<int>(r.scalar<std::uint32_t>("nx"));
  f.ny = static_cast<int>(r.scalar<std::uint32_t>("ny"));
  f.nz = static_cast<int>(r.scalar<std::uint32_t>("nz"));
  if (f.nx <= 0 || f.ny <= 0 || f.nz <= 0) fail("invalid dims", r.offset() - 12);
  f.voxel_size = r.scalar<double>("voxel_size");
  const auto n_orient = r.scalar<std::uint32_t>("n_orient");
  if (n_orient == 0) fail("invalid orientation count", r.offset() - 4);
  const auto storage = r.scalar<std::uint8_t>("storage");
  if (storage > 1) fail("invalid storage tag", r.offset() - 1);

  if (storage == 1) {
    f.storage = R3S2Field::Storage::SH;
    f.lmax = static_cast<int>(r.scalar<std::uint32_t>("lmax"));
    if (static_cast<std::uint32_t>(SHIndex::count(f.lmax)) != n_orient) {
      fail("orientation count inconsistent with lmax", r.offset() - 4);
    }
    f.complex_data = true;
    f.allocate();
    r.bytes(f.cplx_values.data(), f.cplx_values.size() * sizeof(Complex), "SH payload");
  } else {
    f.storage = R3S2Field::Storage::Samples;
    std::vector<Vec3> dirs(n_orient);
    for (auto& d : dirs) {
      r.bytes(d.data(), 24, "orientation table");
      if (std::abs(d.norm() - 1.0) > 1e-9) fail("orientation not unit norm", r.offset() - 24);
    }
    restore_sampling(f, dirs);
    f.complex_data = false;
    f.allocate();
    r.bytes(f.real_values.data(), f.real_values.size() * sizeof(double), "sample payload");
  }
  return f;
}

}  // namespace r3s2
