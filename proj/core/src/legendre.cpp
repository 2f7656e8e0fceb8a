#include "r3s2/legendre.hpp"

#include <cmath>
#include <stdexcept>

namespace r3s2 {

namespace {

// Orthonormal seed P_{m}^{m}(x) = sqrt((2m+1)/2) * prod_k sqrt((2k-1)/(2k)) * s^m,
// s = sqrt(1-x^2). Products stay O(1), no factorials.
double seed(int m, double x) {
  const double s2 = (1.0 - x) * (1.0 + x);
  double p = std::sqrt(0.5);
  for (int k = 1; k <= m; ++k) {
    p *= std::sqrt((2.0 * k + 1.0) / (2.0 * k) * s2);
  }
  return p;
}

}  // namespace

double jacobi_offdiag(int l, int m) {
  const int am = std::abs(m);
  if (l <= am) return 0.0;
  const double num = static_cast<double>(l - am) * (l + am);
  const double den = (2.0 * l - 1.0) * (2.0 * l + 1.0);
  return std::sqrt(num / den);
}

std::vector<double> assoc_legendre_row(int m, int lmax, double x) {
  const int am = std::abs(m);
  if (lmax < am) throw std::domain_error("assoc_legendre_row: lmax < |m|");
  if (std::abs(x) > 1.0) throw std::domain_error("assoc_legendre_row: |x| > 1");
  std::vector<double> row(lmax - am + 1);
  row[0] = seed(am, x);
  if (lmax == am) return row;
  double prev2 = 0.0;
  double prev1 = row[0];
  for (int l = am + 1; l <= lmax; ++l) {
    const double a = jacobi_offdiag(l, am);
    const double b = jacobi_offdiag(l - 1, am);
    const double cur = (x * prev1 - b * prev2) / a;
    row[l - am] = cur;
    prev2 = prev1;
    prev1 = cur;
  }
  return row;
}

double assoc_legendre(int l, int m, double x) {
  if (std::abs(m) > l) throw std::domain_error("assoc_legendre: |m| > l");
  return assoc_legendre_row(m, l, x).back();
}

XRecurrence recurrence_x(int l, int m) {
  const int am = std::abs(m);
  if (am > l) throw std::domain_error("recurrence_x: |m| > l");
  const double den = 2.0 * l + 1.0;
  return {(l - am + 1.0) / den, (l + am) / den};
}

X2Recurrence recurrence_x2(int l, int m) {
  const int am = std::abs(m);
  if (am > l) throw std::domain_error("recurrence_x2: |m| > l");
  X2Recurrence c;
  c.zeta = (l - am + 1.0) * (l - am + 2.0) / ((2.0 * l + 3.0) * (2.0 * l + 1.0));
  c.eta = (2.0 * l * (l + 1.0) - 2.0 * am * am - 1.0) / (4.0 * l * (l + 1.0) - 3.0);
  c.alpha = (l >= am + 2) ? (l + am - 1.0) * (l + am) / ((2.0 * l - 1.0) * (2.0 * l + 1.0)) : 0.0;
  return c;
}

double normalization_ratio(int l, int m, int delta) {
  // N^{l,m}/N^{l+d,m} built from the adjacent-degree ratio
  // N^{l,m}/N^{l+1,m} = sqrt((2l+1)(l+1+|m|) / ((2l+3)(l+1-|m|))).
  const int am = std::abs(m);
  auto up = [am](int ll) {
    return std::sqrt((2.0 * ll + 1.0) * (ll + 1.0 + am) /
                     ((2.0 * ll + 3.0) * (ll + 1.0 - am)));
  };
  switch (delta) {
    case 1:
      return up(l);
    case 2:
      return up(l) * up(l + 1);
    case -1:
      return 1.0 / up(l - 1);
    case -2:
      return 1.0 / (up(l - 2) * up(l - 1));
    default:
      throw std::invalid_argument("normalization_ratio: delta must be +-1 or +-2");
  }
}

}  // namespace r3s2
