#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "r3s2/spherical_harmonics.hpp"

namespace r3s2 {

/// Coefficients for fixed order m, degrees l = |m| .. lmax.
struct SphCoeffVector {
  int m = 0;
  int lmax = 0;
  std::vector<Complex> values;  // length lmax - |m| + 1

  SphCoeffVector() = default;
  SphCoeffVector(int m_, int lmax_)
      : m(m_), lmax(lmax_), values(static_cast<size_t>(lmax_ - std::abs(m_) + 1)) {
    if (lmax < std::abs(m)) throw std::invalid_argument("SphCoeffVector: lmax < |m|");
  }

  int size() const { return static_cast<int>(values.size()); }
  Complex& at_l(int l) { return values[static_cast<size_t>(l - std::abs(m))]; }
  const Complex& at_l(int l) const { return values[static_cast<size_t>(l - std::abs(m))]; }
};

/// Full coefficient stack over all (l,m), l <= lmax, flat ordering k = l^2+l+m.
struct SphCoeffField {
  int lmax = 0;
  std::vector<Complex> values;

  SphCoeffField() = default;
  explicit SphCoeffField(int lmax_)
      : lmax(lmax_), values(static_cast<size_t>(SHIndex::count(lmax_))) {}

  Complex& at(int l, int m) { return values[static_cast<size_t>(SHIndex{l, m}.flat())]; }
  const Complex& at(int l, int m) const {
    return values[static_cast<size_t>(SHIndex{l, m}.flat())];
  }

  /// Extract the fixed-m block.
  SphCoeffVector block(int m) const {
    SphCoeffVector v(m, lmax);
    for (int l = std::abs(m); l <= lmax; ++l) v.at_l(l) = at(l, m);
    return v;
  }
  void set_block(const SphCoeffVector& v) {
    for (int l = std::abs(v.m); l <= lmax; ++l) at(l, v.m) = v.at_l(l);
  }
};

}  // namespace r3s2
