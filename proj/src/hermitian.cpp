#include "tomoinfo/hermitian.hpp"

#include <algorithm>
#include <cmath>

namespace tomoinfo {

bool is_hermitian(const CMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_symmetric(const RMatrix& s, double tol) {
  if (s.rows() != s.cols()) return false;
  if (s.rows() == 0) return true;
  return (s - s.transpose()).cwiseAbs().maxCoeff() <= tol;
}

void require_density_matrix(const CMatrix& rho, double eig_tol) {
  if (rho.rows() != rho.cols() || rho.rows() < 2)
    throw std::invalid_argument("density matrix must be square with dimension >= 2");
  if (!is_hermitian(rho))
    throw std::invalid_argument("density matrix is not Hermitian");
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > 1e-10)
    throw std::invalid_argument("density matrix trace differs from 1");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -eig_tol)
    throw std::invalid_argument("density matrix has a negative eigenvalue");
}

double hs_inner(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("hs_inner: operands must be square and of equal dimension");
  // tr(A^dag B) = sum_ij conj(A_ij) B_ij
  return a.conjugate().cwiseProduct(b).sum().real();
}

CMatrix projector(const CVector& v) {
  if (v.size() < 2)
    throw std::invalid_argument("projector: vector dimension must be >= 2");
  if (std::abs(v.norm() - 1.0) > kHermTol)
    throw std::invalid_argument("projector: vector is not normalized");
  return v * v.adjoint();
}

double outcome_probability(const CMatrix& rho, const CMatrix& p) {
  if (rho.rows() != p.rows() || rho.cols() != p.cols())
    throw std::invalid_argument("outcome_probability: dimension mismatch");
  require_density_matrix(rho);
  if (!is_hermitian(p))
    throw std::invalid_argument("outcome_probability: projector is not Hermitian");
  return std::clamp(hs_inner(p, rho), 0.0, 1.0);
}

RVector sym_eigen(const RMatrix& s) {
  if (s.rows() != s.cols())
    throw std::invalid_argument("sym_eigen: matrix must be square");
  if (!is_symmetric(s))
    throw std::invalid_argument("sym_eigen: matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<RMatrix> es(s, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

SymEigen sym_eigen_full(const RMatrix& s) {
  if (s.rows() != s.cols())
    throw std::invalid_argument("sym_eigen: matrix must be square");
  if (!is_symmetric(s))
    throw std::invalid_argument("sym_eigen: matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<RMatrix> es(s);
  return {es.eigenvalues(), es.eigenvectors()};
}

double determinant(const RMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix must be square");
  if (m.rows() == 0) return 1.0;
  if (is_symmetric(m)) {
    Eigen::SelfAdjointEigenSolver<RMatrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().prod();
  }
  return Eigen::PartialPivLU<RMatrix>(m).determinant();
}

}  // namespace tomoinfo
