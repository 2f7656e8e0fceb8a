#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <r3s2/r3s2_io.hpp>
#include <stdexcept>
#include <string>

#include "oracles.hpp"

using namespace r3s2;

namespace {

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

R3S2Field sample_field() {
  R3S2Field f;
  f.nx = 3;
  f.ny = 4;
  f.nz = 2;
  f.voxel_size = 0.37;
  f.storage = R3S2Field::Storage::Samples;
  f.sampling = icosphere_sampling(1);
  f.complex_data = false;
  f.allocate();
  oracle::Rng rng(2);
  for (auto& v : f.real_values) v = rng.range(-3, 3);
  return f;
}

R3S2Field sh_field() {
  R3S2Field f;
  f.nx = f.ny = f.nz = 3;
  f.voxel_size = 1.25;
  f.storage = R3S2Field::Storage::SH;
  f.lmax = 4;
  f.frequency_domain = false;
  f.complex_data = true;
  f.allocate();
  oracle::Rng rng(6);
  for (auto& v : f.cplx_values) v = Complex{rng.range(-1, 1), rng.range(-1, 1)};
  return f;
}

}  // namespace

TEST_CASE("samples-storage round trip is bit exact") {
  const std::string path = temp_path("io_samples.r3s2");
  const R3S2Field f = sample_field();
  save_field(f, path);
  const R3S2Field g = load_field(path);
  CHECK(g.nx == f.nx);
  CHECK(g.ny == f.ny);
  CHECK(g.nz == f.nz);
  CHECK(g.voxel_size == f.voxel_size);  // bitwise
  CHECK(g.storage == R3S2Field::Storage::Samples);
  REQUIRE(g.sampling.size() == f.sampling.size());
  for (int i = 0; i < f.sampling.size(); ++i) {
    CHECK(g.sampling.directions[static_cast<size_t>(i)] ==
          f.sampling.directions[static_cast<size_t>(i)]);
  }
  // Recognized icosphere: quadrature weights and triangles restored.
  CHECK(g.sampling.weights == f.sampling.weights);
  CHECK(g.sampling.triangles.size() == f.sampling.triangles.size());
  REQUIRE(g.real_values.size() == f.real_values.size());
  for (size_t i = 0; i < f.real_values.size(); ++i) {
    CHECK(g.real_values[i] == f.real_values[i]);  // bitwise
  }
  std::remove(path.c_str());
}

TEST_CASE("SH-storage round trip is bit exact") {
  const std::string path = temp_path("io_sh.r3s2");
  const R3S2Field f = sh_field();
  save_field(f, path);
  const R3S2Field g = load_field(path);
  CHECK(g.storage == R3S2Field::Storage::SH);
  CHECK(g.lmax == f.lmax);
  CHECK(g.complex_data);
  REQUIRE(g.cplx_values.size() == f.cplx_values.size());
  for (size_t i = 0; i < f.cplx_values.size(); ++i) {
    CHECK(g.cplx_values[i] == f.cplx_values[i]);  // bitwise
  }
  std::remove(path.c_str());
}

TEST_CASE("truncated file reports the missing bytes") {
  const std::string path = temp_path("io_trunc.r3s2");
  save_field(sample_field(), path);
  const auto full = std::filesystem::file_size(path);
  std::filesystem::resize_file(path, full - 5);
  try {
    load_field(path);
    FAIL("expected a truncation error");
  } catch (const std::runtime_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("truncated") != std::string::npos);
    CHECK(msg.find("bytes missing") != std::string::npos);
    CHECK(msg.find("byte") != std::string::npos);
  }
  std::remove(path.c_str());
}

TEST_CASE("unsupported version rejected") {
  const std::string path = temp_path("io_version.r3s2");
  save_field(sample_field(), path);
  {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(4);
    const std::uint32_t v2 = 2;
    f.write(reinterpret_cast<const char*>(&v2), 4);
  }
  CHECK_THROWS_AS(load_field(path), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("bad magic rejected") {
  const std::string path = temp_path("io_magic.r3s2");
  {
    std::ofstream f(path, std::ios::binary);
    f << "NOPE some bytes that are not a field";
  }
  CHECK_THROWS_AS(load_field(path), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("missing file rejected") {
  CHECK_THROWS_AS(load_field(temp_path("io_missing_does_not_exist.r3s2")),
                  std::runtime_error);
}
