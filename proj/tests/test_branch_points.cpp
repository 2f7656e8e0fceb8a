#include <doctest.h>

#include <cmath>
#include <r3s2/branch_points.hpp>
#include <r3s2/eigensystem.hpp>
#include <stdexcept>

using namespace r3s2;

TEST_CASE("no branch point below the guaranteed-real bound") {
  for (int m : {0, 1, 2}) {
    const auto list = detect_branch_points(m, m + 6.0, 1e-3);
    for (double p : list.points) CHECK(p > m + 1.0);
  }
}

TEST_CASE("points are ascending and separated") {
  const auto list = detect_branch_points(0, 12.0, 1e-3);
  REQUIRE(list.points.size() >= 2);
  for (size_t i = 1; i < list.points.size(); ++i) {
    CHECK(list.points[i] > list.points[i - 1] + 10 * list.scan_resolution);
  }
}

TEST_CASE("eigenvalue gap closes at a reported branch point") {
  const auto list = detect_branch_points(0, 6.0, 1e-6, 16);
  REQUIRE(!list.points.empty());
  const double rho = list.points.front();
  const auto es = gswe_eigensystem(0, rho, 16);
  double min_gap = 1e30;
  for (int i = 0; i < es.size(); ++i) {
    for (int j = i + 1; j < es.size(); ++j) {
      min_gap = std::min(min_gap, std::abs(es.eigenvalues(i) - es.eigenvalues(j)));
    }
  }
  // Eigenvalues split like sqrt(rho - rho_branch), so the gap at resolution
  // eps is O(sqrt(eps)); assert a generous multiple.
  CHECK(min_gap < 100 * std::sqrt(list.scan_resolution));
  // Crossing the point changes the number of complex eigenvalues.
  const auto before = gswe_eigensystem(0, rho - 0.01, 16);
  const auto after = gswe_eigensystem(0, rho + 0.01, 16);
  int nb = 0, na = 0;
  for (int j = 0; j < before.size(); ++j) nb += before.is_real[static_cast<size_t>(j)] ? 0 : 1;
  for (int j = 0; j < after.size(); ++j) na += after.is_real[static_cast<size_t>(j)] ? 0 : 1;
  CHECK(na == nb + 2);
}

TEST_CASE("invalid arguments rejected") {
  CHECK_THROWS_AS(detect_branch_points(2, 2.5, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(detect_branch_points(0, 5.0, -1.0), std::invalid_argument);
}

TEST_CASE("first m=0 branch point exceeds 1 and higher m branch later") {
  const auto m0 = detect_branch_points(0, 8.0, 1e-4);
  const auto m2 = detect_branch_points(2, 12.0, 1e-4);
  REQUIRE(!m0.points.empty());
  REQUIRE(!m2.points.empty());
  CHECK(m0.points.front() > 1.0);
  CHECK(m2.points.front() > m0.points.front());
}
