// Dense complex-vector and Hermitian-operator kernels: Hilbert-Schmidt inner
// products, projectors, outcome probabilities, symmetric eigendecomposition
// and determinants. Everything here is a pure function on Eigen values.
#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace tomoinfo {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

// Absolute tolerance for hermiticity / symmetry / orthonormality checks.
// Construction noise in double precision sits near 1e-15.
inline constexpr double kHermTol = 1e-12;

// Mathematical degeneracy: singular Gram matrix, incomplete design.
// The CLI maps this to exit code 3 (input errors map to 2).
class SingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_hermitian(const CMatrix& a, double tol = kHermTol);
bool is_symmetric(const RMatrix& s, double tol = kHermTol);

// Throws std::invalid_argument unless rho is Hermitian, has unit trace and
// no eigenvalue below -eig_tol.
void require_density_matrix(const CMatrix& rho, double eig_tol = 1e-10);

// Hilbert-Schmidt inner product tr(A^dag B). Real for Hermitian inputs;
// the imaginary residue (< 1e-12 for valid inputs) is discarded.
double hs_inner(const CMatrix& a, const CMatrix& b);

// Rank-1 projector |v><v| of a unit vector (checked to 1e-12).
CMatrix projector(const CVector& v);

// Born probability tr(P rho), clamped to [0,1]. rho must be a density matrix.
double outcome_probability(const CMatrix& rho, const CMatrix& p);

// Ascending eigenvalues of a real symmetric matrix.
RVector sym_eigen(const RMatrix& s);

struct SymEigen {
  RVector values;   // ascending
  RMatrix vectors;  // orthonormal columns, same order
};
SymEigen sym_eigen_full(const RMatrix& s);

// Determinant of a square real matrix: eigenvalue product for symmetric
// inputs, LU with partial pivoting otherwise. The two routes are
// cross-checked in the test suite.
double determinant(const RMatrix& m);

}  // namespace tomoinfo
