#pragma once

#include <Eigen/Core>
#include <cstdlib>

namespace r3s2 {

enum class OperatorKind { M1, M2, Lambda };

/// Banded operator acting on the fixed-m coefficient block, degrees
/// l = |m| .. lmax. M1 is x^2-multiplication (diagonals 0, +-2), M2 is
/// x-multiplication (diagonals +-1, zero main diagonal), Lambda is the
/// spherical Laplacian diag(l(l+1)). All entries are in the orthonormal
/// Legendre basis, so M1 and M2 are symmetric.
struct TriDiagOperator {
  int m = 0;
  int lmax = 0;
  OperatorKind kind = OperatorKind::Lambda;
  Eigen::VectorXd diag;  ///< main diagonal (zero vector for M2)
  Eigen::VectorXd off1;  ///< diagonals +-1 (M2 only), length n-1
  Eigen::VectorXd off2;  ///< diagonals +-2 (M1 only), length n-2

  int size() const { return lmax - std::abs(m) + 1; }

  Eigen::MatrixXd dense() const;
};

TriDiagOperator build_m1(int m, int lmax);
TriDiagOperator build_m2(int m, int lmax);
TriDiagOperator build_lambda(int m, int lmax);

}  // namespace r3s2
