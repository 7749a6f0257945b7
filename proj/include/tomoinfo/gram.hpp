// The Gram-determinant information measure of a measurement design and its
// derived quantities: the reduced matrix, the determinant upper bound, the
// epsilon lower bound, the two-value closed-form spectrum, linear-inversion
// state reconstruction, and a hill-climbing design optimizer.
#pragma once

#include <cstdint>
#include <vector>

#include "tomoinfo/bases.hpp"

namespace tomoinfo {

// s(k,l,i,j) = |<alpha_i^k|alpha_j^l>|^2 for an actual design. Diagonal
// blocks are snapped to exact identities (the bases are orthonormal to
// 1e-12 by construction).
TransitionTable transition_table(const MeasurementDesign& d);

// Gram matrix of the traceless operators T_i^k = P_i^k - I/n with one vector
// index dropped per basis. Entry ([k,i],[l,j]) = s(k,l,i,j) - 1/n; row/column
// blocks of size n-1, (n+1)(n-1) = n^2-1 total. `drop` is the 0-based dropped
// index (default: the last).
struct GramMatrix {
  int n = 0;
  int drop = 0;
  RMatrix gamma;
};

GramMatrix gram_matrix(const TransitionTable& t, int drop = -1);

// Same matrix through the coordinate route: expand each T_i^k in a fixed
// orthonormal basis of traceless Hermitian operators, collect the real
// coefficient matrix C and return C C^t. Agrees with gram_matrix applied to
// the transition table to 1e-10; positive semidefinite by construction.
GramMatrix gram_from_coords(const MeasurementDesign& d, int drop = -1);

// Determinant of the block-diagonal part: exactly n^-(n+1).
double det_gamma0(int n);

// Row-reduced form of the Gram matrix. `tilde` has identity diagonal blocks
// and off-diagonal blocks Psi(i,j) = s(k,l,i,j) - s(k,l,drop,j), and
// det(Gamma) = det(Gamma0) * det(tilde). `symmetrized` is
// D^-1/2 Gamma D^-1/2 with D = Gamma0: symmetric, unit diagonal blocks, and
// the same determinant ratio.
struct ReducedMatrix {
  int n = 0;
  int drop = 0;
  RMatrix tilde;
  RMatrix symmetrized;
};

ReducedMatrix reduced_matrix(const TransitionTable& t, int drop = -1);

// Summary of the information content of one table.
//
//   det_gamma        determinant of the Gram matrix (0 below 1e-300)
//   vd               det_gamma / n^-(n+1); equals 1 exactly at MUBs
//   info_nats        0.5 * ln det_gamma    (-inf when singular)
//   info_loss_nats   -0.5 * ln vd          (+inf when singular)
//   epsilon          max |s(k,l,i,j) - s(k,l,r,j)| over k != l, all j, i, r
//   lambda_min       min eigenvalue of (symmetrized reduced matrix - I)
//   spec_radius      spectral radius of the same matrix
//   lower_bound      exp(-(n^2-n)^2 (n^2-1) epsilon^2 / (1+lambda_min));
//                    unavailable (NaN) when 1+lambda_min <= 1e-14
//   bound_holds      vd >= lower_bound - 1e-12 (true when no bound)
//   singular         vd <= 1e-14: the table is not a complete design
struct InfoReport {
  int n = 0;
  double det_gamma = 0.0;
  double det_gamma0 = 0.0;
  double vd = 0.0;
  double info_nats = 0.0;
  double info_loss_nats = 0.0;
  double epsilon = 0.0;
  double lambda_min = 0.0;
  double spec_radius = 0.0;
  double lower_bound = 0.0;
  bool bound_available = false;
  bool bound_holds = false;
  bool singular = false;
};

InfoReport info_report(const TransitionTable& t, int drop = -1);

// Closed-form spectrum of the reduced matrix of a two-value table:
// 1 + nc with multiplicity n^2-n, 1 - n^2 c with multiplicity n-1, and
// determinant (1+nc)^(n^2-n) (1-n^2 c)^(n-1).
struct TwoValueSpectrum {
  int n = 0;
  double c = 0.0;
  double bulk_value = 0.0;     // 1 + nc
  int bulk_multiplicity = 0;   // n^2 - n
  double shared_value = 0.0;   // 1 - n^2 c
  int shared_multiplicity = 0; // n - 1
  double closed_det = 0.0;
};

TwoValueSpectrum two_value_spectrum(int n, double c);

// Linear-inversion tomography: solves Gamma y = (p_j^l - 1/n) over the kept
// indices and returns rho = I/n + sum y_i^k T_i^k. `probabilities` holds one
// n-vector per basis (each must sum to 1 within 1e-9). Throws SingularError
// for an incomplete design.
CMatrix reconstruct_state(const std::vector<RVector>& probabilities,
                          const MeasurementDesign& d, int drop = -1);

// Random-direction hill climbing on per-basis unitary perturbations,
// accepting moves that strictly increase 0.5*ln det Gamma. The step size is
// halved after 50 consecutive rejections. `trace` records the running value
// after every step (steps+1 entries, non-decreasing).
struct OptimizeResult {
  MeasurementDesign design;
  std::vector<double> trace;
  int accepted = 0;
};

OptimizeResult optimize_design(const MeasurementDesign& start, int steps,
                               double step_size, std::uint64_t seed);

// 0.5 * ln det Gamma of a design; -inf if the design is incomplete.
double design_info_nats(const MeasurementDesign& d);

}  // namespace tomoinfo
