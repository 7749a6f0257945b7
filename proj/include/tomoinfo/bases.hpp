// Measurement-design construction: exact MUBs in prime dimension, Haar-random
// and perturbed bases, and synthetic two-value transition-probability tables.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tomoinfo/hermitian.hpp"

namespace tomoinfo {

// One projective measurement; column i of `vectors` is the ket |alpha_i>.
struct OrthonormalBasis {
  CMatrix vectors;
  std::string label;

  int dim() const { return static_cast<int>(vectors.rows()); }
};

// Ordered list of n+1 orthonormal bases: a candidate complete set of
// measurement bases. Completeness itself is a property of the Gram matrix
// (see gram.hpp), not of the container.
struct MeasurementDesign {
  int n = 0;
  std::vector<OrthonormalBasis> bases;
};

void require_orthonormal(const OrthonormalBasis& b, double tol = kHermTol);
void require_design(const MeasurementDesign& d, double tol = kHermTol);

// All pairwise transition probabilities s(k,l,i,j) = |<alpha_i^k|alpha_j^l>|^2
// for bases k,l in 0..n and outcomes i,j in 0..n-1, stored as one
// (n+1)n x (n+1)n matrix of n x n blocks. A synthetic table carries no
// underlying vectors (the two-value model below).
class TransitionTable {
 public:
  TransitionTable(int n, bool synthetic);

  int n() const { return n_; }
  int basis_count() const { return n_ + 1; }
  bool synthetic() const { return synthetic_; }

  double s(int k, int l, int i, int j) const { return s_(k * n_ + i, l * n_ + j); }
  void set(int k, int l, int i, int j, double v) { s_(k * n_ + i, l * n_ + j) = v; }

  Eigen::Block<const RMatrix> block(int k, int l) const {
    return s_.block(k * n_, l * n_, n_, n_);
  }
  Eigen::Block<RMatrix> block(int k, int l) { return s_.block(k * n_, l * n_, n_, n_); }

  const RMatrix& raw() const { return s_; }

 private:
  int n_;
  bool synthetic_;
  RMatrix s_;
};

// Invariants: identity diagonal blocks (1e-12), doubly stochastic blocks
// (1e-10), global symmetry s(k,l,i,j) = s(l,k,j,i) (1e-12).
void validate_table(const TransitionTable& t);

bool is_prime(int n);

// Canonical unit vectors e_1..e_n.
OrthonormalBasis standard_basis(int n);

// Exact set of n+1 mutually unbiased bases for prime n. n = 2 uses the
// computational / diagonal / circular triple; odd primes use the standard
// basis plus the quadratic-phase vectors with components
// exp(2*pi*i*(a*m^2 + j*m)/n)/sqrt(n). Composite n is rejected.
MeasurementDesign mub_prime(int n);

// Columns of a Haar-distributed unitary: QR of a complex Gaussian matrix with
// the R diagonal phases absorbed into Q.
OrthonormalBasis haar_random_basis(int n, std::mt19937_64& rng);
OrthonormalBasis haar_random_basis(int n, std::uint64_t seed);

// n+1 independent Haar bases; complete with probability one.
MeasurementDesign haar_random_design(int n, std::uint64_t seed);

// Applies exp(i*eps*H) with H a random Hermitian matrix normalized to unit
// spectral radius, so eps is directly the perturbation magnitude.
// eps = 0 returns the input unchanged.
OrthonormalBasis perturb_basis(const OrthonormalBasis& b, double eps, std::mt19937_64& rng);
OrthonormalBasis perturb_basis(const OrthonormalBasis& b, double eps, std::uint64_t seed);

// Perturbs every basis of a design, drawing from one seeded stream.
MeasurementDesign perturb_design(const MeasurementDesign& d, double eps, std::uint64_t seed);

// Synthetic two-value table: off-diagonal blocks hold c + 1/n off their
// diagonal and 1/n - (n-1)c on it, diagonal blocks are exact identities.
// Block row/column sums equal 1 identically in c, so the doubly stochastic
// invariant holds by construction. c is rejected unless both values are
// probabilities.
TransitionTable two_value_table(int n, double c);

// The two-value table at c = 1/n^2 (entries (n+1)/n^2 and 1/n^2).
TransitionTable krsw_table(int n);

// max over k != l and all i,j of | s(k,l,i,j) - 1/n |; zero exactly at MUBs.
double mub_deviation(const MeasurementDesign& d);

}  // namespace tomoinfo
