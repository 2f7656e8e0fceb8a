#pragma once

#include <vector>

namespace r3s2 {

/// Associated Legendre function with the normalization factor
/// N^{l,m} = sqrt((2l+1)(l-|m|)! / (2(l+|m|)!)) folded in, so that
/// the functions are orthonormal on [-1,1]:
///   int_{-1}^{1} P(l,m,x) P(l',m,x) dx = delta_{ll'}.
/// No Condon-Shortley phase here; the (-1)^m convention lives in the
/// spherical harmonic definition. P(l,m,x) == P(l,-m,x).
double assoc_legendre(int l, int m, double x);

/// All normalized P(l,m,x) for fixed m, l = |m| .. lmax, by stable
/// upward recurrence in l.
std::vector<double> assoc_legendre_row(int m, int lmax, double x);

struct XRecurrence {
  double xi;  ///< coefficient of P_{l+1}^m in x*P_l^m (unnormalized basis)
  double nu;  ///< coefficient of P_{l-1}^m
};

struct X2Recurrence {
  double zeta;   ///< coefficient of P_{l+2}^m in x^2*P_l^m (unnormalized basis)
  double eta;    ///< coefficient of P_l^m
  double alpha;  ///< coefficient of P_{l-2}^m
};

/// Raw three-term coefficients of x * P_l^m.
XRecurrence recurrence_x(int l, int m);

/// Raw five-term (stride 2) coefficients of x^2 * P_l^m.
X2Recurrence recurrence_x2(int l, int m);

/// Jacobi-matrix entry for the orthonormal basis: the coefficient of
/// P_{l-1} in x*P_l (equal to the coefficient of P_l in x*P_{l-1}).
/// Zero for l <= |m|.
double jacobi_offdiag(int l, int m);

/// Ratio N^{l,m} / N^{l+delta,m} used to carry raw coefficients into the
/// normalized basis. delta in {-2,-1,1,2}.
double normalization_ratio(int l, int m, int delta);

}  // namespace r3s2
