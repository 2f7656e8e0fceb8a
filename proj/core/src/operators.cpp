#include "r3s2/operators.hpp"

#include <stdexcept>

#include "r3s2/legendre.hpp"

namespace r3s2 {

namespace {

void check_args(int m, int lmax) {
  if (lmax < std::abs(m)) throw std::invalid_argument("operator build: lmax < |m|");
}

}  // namespace

Eigen::MatrixXd TriDiagOperator::dense() const {
  const int n = size();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  A.diagonal() = diag;
  for (int j = 0; j + 1 < n && off1.size() > 0; ++j) A(j, j + 1) = A(j + 1, j) = off1(j);
  for (int j = 0; j + 2 < n && off2.size() > 0; ++j) A(j, j + 2) = A(j + 2, j) = off2(j);
  return A;
}

TriDiagOperator build_m1(int m, int lmax) {
  check_args(m, lmax);
  TriDiagOperator op{m, lmax, OperatorKind::M1, {}, {}, {}};
  const int n = op.size();
  const int am = std::abs(m);
  op.diag.resize(n);
  op.off2.resize(std::max(n - 2, 0));
  // In the orthonormal basis x-multiplication is the Jacobi matrix with
  // off-diagonal A_l = jacobi_offdiag(l,m); M1 = (Jacobi)^2 restricted to
  // bands 0 and +-2.
  for (int j = 0; j < n; ++j) {
    const int l = am + j;
    const double a_lo = jacobi_offdiag(l, m);
    const double a_hi = jacobi_offdiag(l + 1, m);
    op.diag(j) = a_lo * a_lo + a_hi * a_hi;
    if (j + 2 < n) op.off2(j) = a_hi * jacobi_offdiag(l + 2, m);
  }
  return op;
}

TriDiagOperator build_m2(int m, int lmax) {
  check_args(m, lmax);
  TriDiagOperator op{m, lmax, OperatorKind::M2, {}, {}, {}};
  const int n = op.size();
  const int am = std::abs(m);
  op.diag = Eigen::VectorXd::Zero(n);
  op.off1.resize(std::max(n - 1, 0));
  for (int j = 0; j + 1 < n; ++j) op.off1(j) = jacobi_offdiag(am + j + 1, m);
  return op;
}

TriDiagOperator build_lambda(int m, int lmax) {
  check_args(m, lmax);
  TriDiagOperator op{m, lmax, OperatorKind::Lambda, {}, {}, {}};
  const int n = op.size();
  const int am = std::abs(m);
  op.diag.resize(n);
  for (int j = 0; j < n; ++j) {
    const double l = am + j;
    op.diag(j) = l * (l + 1.0);
  }
  return op;
}

}  // namespace r3s2
