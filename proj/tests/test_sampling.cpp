#include <doctest.h>

#include <cmath>
#include <r3s2/sampling.hpp>
#include <r3s2/sphere_transform.hpp>

#include "oracles.hpp"

using namespace r3s2;

TEST_CASE("icosphere vertex counts and weight normalization") {
  struct Expect {
    int refinement, vertices;
  };
  for (const auto& e : {Expect{0, 12}, Expect{1, 42}, Expect{2, 162}, Expect{3, 642}}) {
    const OrientationSampling s = icosphere_sampling(e.refinement);
    CHECK(s.size() == e.vertices);
    double wsum = 0.0;
    for (double w : s.weights) {
      CHECK(w > 0.0);
      wsum += w;
    }
    CHECK(wsum == doctest::Approx(4.0 * M_PI).epsilon(1e-12));
    for (const auto& d : s.directions) CHECK(std::abs(d.norm() - 1.0) < 1e-12);
    CHECK(static_cast<int>(s.triangles.size()) == 20 * (1 << (2 * e.refinement)));
  }
}

TEST_CASE("spherical triangle area: octant") {
  CHECK(spherical_triangle_area(Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()) ==
        doctest::Approx(M_PI / 2.0).epsilon(1e-12));
}

TEST_CASE("nearest direction lookup") {
  const OrientationSampling s = icosphere_sampling(1);
  for (int i = 0; i < s.size(); ++i) {
    CHECK(s.nearest(s.directions[static_cast<size_t>(i)]) == i);
  }
}

TEST_CASE("forward transform of a constant") {
  const OrientationSampling s = icosphere_sampling(2);
  const SphereTransform t(s, 6);
  Eigen::VectorXcd samples = Eigen::VectorXcd::Constant(s.size(), 1.0);
  const SphCoeffField c = t.forward(samples);
  CHECK(c.at(0, 0).real() == doctest::Approx(std::sqrt(4.0 * M_PI)).epsilon(1e-10));
  for (int l = 1; l <= 6; ++l) {
    for (int m = -l; m <= l; ++m) CHECK(std::abs(c.at(l, m)) < 1e-10);
  }
}

TEST_CASE("forward transform isolates a single harmonic") {
  const OrientationSampling s = icosphere_sampling(2);
  const SphereTransform t(s, 6);
  Eigen::VectorXcd samples(s.size());
  for (int i = 0; i < s.size(); ++i) {
    samples(i) = spherical_harmonic(3, 2, s.directions[static_cast<size_t>(i)]);
  }
  const SphCoeffField c = t.forward(samples);
  CHECK(std::abs(c.at(3, 2) - Complex{1.0, 0.0}) < 1e-8);
  for (int l = 0; l <= 6; ++l) {
    for (int m = -l; m <= l; ++m) {
      if (l == 3 && m == 2) continue;
      CHECK(std::abs(c.at(l, m)) < 1e-8);
    }
  }
}

TEST_CASE("band-limited round trip") {
  const OrientationSampling s = icosphere_sampling(2);
  const int lmax = 8;
  const SphereTransform t(s, lmax);
  oracle::Rng rng(42);
  SphCoeffField c(lmax);
  for (auto& v : c.values) v = Complex{rng.range(-1, 1), rng.range(-1, 1)};
  const Eigen::VectorXcd samples = t.inverse(c);
  const SphCoeffField back = t.forward(samples);
  for (size_t i = 0; i < c.values.size(); ++i) {
    CHECK(std::abs(back.values[i] - c.values[i]) < 1e-8);
  }
}

TEST_CASE("synthesize at arbitrary directions") {
  SphCoeffField c(2);
  c.at(2, -1) = Complex{0.5, -0.25};
  const Vec3 dir = Vec3(0.2, 0.9, -0.3).normalized();
  const Eigen::VectorXcd vals = SphereTransform::synthesize(c, {dir});
  const Complex expect = Complex{0.5, -0.25} * spherical_harmonic(2, -1, dir);
  CHECK(std::abs(vals(0) - expect) < 1e-13);
}

TEST_CASE("insufficient sampling is rejected") {
  CHECK_THROWS(SphereTransform(icosphere_sampling(0), 6));
}
