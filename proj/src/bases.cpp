#include "tomoinfo/bases.hpp"

#include <cmath>
#include <numbers>

namespace tomoinfo {

void require_orthonormal(const OrthonormalBasis& b, double tol) {
  const int n = b.dim();
  if (n < 2 || b.vectors.cols() != n)
    throw std::invalid_argument("basis must hold n >= 2 vectors of dimension n");
  const CMatrix overlap = b.vectors.adjoint() * b.vectors;
  if ((overlap - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("basis '" + b.label + "' is not orthonormal");
}

void require_design(const MeasurementDesign& d, double tol) {
  if (d.n < 2) throw std::invalid_argument("design dimension must be >= 2");
  if (static_cast<int>(d.bases.size()) != d.n + 1)
    throw std::invalid_argument("design must hold exactly n+1 bases");
  for (const auto& b : d.bases) {
    if (b.dim() != d.n)
      throw std::invalid_argument("all bases of a design must have dimension n");
    require_orthonormal(b, tol);
  }
}

TransitionTable::TransitionTable(int n, bool synthetic)
    : n_(n), synthetic_(synthetic), s_(RMatrix::Zero((n + 1) * n, (n + 1) * n)) {
  if (n < 2) throw std::invalid_argument("transition table dimension must be >= 2");
}

void validate_table(const TransitionTable& t) {
  const int n = t.n();
  const RMatrix identity = RMatrix::Identity(n, n);
  for (int k = 0; k <= n; ++k) {
    if ((t.block(k, k) - identity).cwiseAbs().maxCoeff() > 1e-12)
      throw std::invalid_argument("table diagonal block is not the identity");
  }
  for (int k = 0; k <= n; ++k) {
    for (int l = 0; l <= n; ++l) {
      const auto block = t.block(k, l);
      if (block.minCoeff() < -1e-12 || block.maxCoeff() > 1.0 + 1e-12)
        throw std::invalid_argument("table entry outside [0,1]");
      if ((block.rowwise().sum().array() - 1.0).abs().maxCoeff() > 1e-10 ||
          (block.colwise().sum().array() - 1.0).abs().maxCoeff() > 1e-10)
        throw std::invalid_argument("table block is not doubly stochastic");
    }
  }
  // s(k,l,i,j) = s(l,k,j,i) is symmetry of the stacked matrix.
  if ((t.raw() - t.raw().transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("table is not symmetric");
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

OrthonormalBasis standard_basis(int n) {
  if (n < 2) throw std::invalid_argument("basis dimension must be >= 2");
  return {CMatrix::Identity(n, n), "computational"};
}

MeasurementDesign mub_prime(int n) {
  if (!is_prime(n))
    throw std::invalid_argument("MUB construction requires a prime dimension, got " +
                                std::to_string(n));
  MeasurementDesign d;
  d.n = n;
  d.bases.push_back(standard_basis(n));
  if (n == 2) {
    const double r = std::numbers::sqrt2 / 2.0;
    CMatrix diag(2, 2), circ(2, 2);
    diag << Complex(r, 0), Complex(r, 0), Complex(r, 0), Complex(-r, 0);
    circ << Complex(r, 0), Complex(r, 0), Complex(0, r), Complex(0, -r);
    d.bases.push_back({diag, "diagonal"});
    d.bases.push_back({circ, "circular"});
    return d;
  }
  // Odd prime: basis a has vectors v_j with components
  // exp(2*pi*i*(a*m^2 + j*m)/n)/sqrt(n). The exponent is reduced mod n in
  // integer arithmetic so every phase is an exact multiple of 2*pi/n.
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int a = 0; a < n; ++a) {
    CMatrix vecs(n, n);
    for (int j = 0; j < n; ++j) {
      for (int m = 0; m < n; ++m) {
        const long long expo = (static_cast<long long>(a) * m * m +
                                static_cast<long long>(j) * m) % n;
        vecs(m, j) = std::polar(amp, 2.0 * std::numbers::pi * expo / n);
      }
    }
    d.bases.push_back({vecs, "quadratic-phase-" + std::to_string(a)});
  }
  return d;
}

namespace {

CMatrix gaussian_complex(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(i, j) = Complex(re, im);
    }
  return z;
}

}  // namespace

OrthonormalBasis haar_random_basis(int n, std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("basis dimension must be >= 2");
  const CMatrix z = gaussian_complex(n, rng);
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  // Fix the gauge: absorb the phases of the R diagonal so Q is Haar.
  for (int i = 0; i < n; ++i) {
    const Complex r = qr.matrixQR()(i, i);
    const double mag = std::abs(r);
    q.col(i) *= (mag > 0.0) ? r / mag : Complex(1.0, 0.0);
  }
  return {q, "haar"};
}

OrthonormalBasis haar_random_basis(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_random_basis(n, rng);
}

MeasurementDesign haar_random_design(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  MeasurementDesign d;
  d.n = n;
  for (int k = 0; k <= n; ++k) {
    auto b = haar_random_basis(n, rng);
    b.label = "haar-" + std::to_string(k);
    d.bases.push_back(std::move(b));
  }
  return d;
}

OrthonormalBasis perturb_basis(const OrthonormalBasis& b, double eps, std::mt19937_64& rng) {
  if (eps < 0.0) throw std::invalid_argument("perturbation magnitude must be >= 0");
  require_orthonormal(b);
  const int n = b.dim();
  const CMatrix z = gaussian_complex(n, rng);  // always consume the stream
  if (eps == 0.0) return b;
  const CMatrix h = 0.5 * (z + z.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const RVector lam = es.eigenvalues();
  const double radius = std::max(std::abs(lam(0)), std::abs(lam(n - 1)));
  if (radius == 0.0) return b;
  CVector phases(n);
  for (int i = 0; i < n; ++i) phases(i) = std::polar(1.0, eps * lam(i) / radius);
  const CMatrix u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  return {u * b.vectors, b.label};
}

OrthonormalBasis perturb_basis(const OrthonormalBasis& b, double eps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return perturb_basis(b, eps, rng);
}

MeasurementDesign perturb_design(const MeasurementDesign& d, double eps, std::uint64_t seed) {
  require_design(d);
  std::mt19937_64 rng(seed);
  MeasurementDesign out;
  out.n = d.n;
  for (const auto& b : d.bases) out.bases.push_back(perturb_basis(b, eps, rng));
  return out;
}

TransitionTable two_value_table(int n, double c) {
  if (n < 2) throw std::invalid_argument("table dimension must be >= 2");
  const double off = c + 1.0 / n;              // i != j entries
  const double diag = 1.0 / n - (n - 1) * c;   // i == j entries
  if (diag < -1e-12 || off < -1e-12 || diag > 1.0 + 1e-12 || off > 1.0 + 1e-12)
    throw std::invalid_argument("two-value parameter c out of the admissible range");
  TransitionTable t(n, /*synthetic=*/true);
  for (int k = 0; k <= n; ++k) {
    for (int l = 0; l <= n; ++l) {
      if (k == l) {
        t.block(k, k) = RMatrix::Identity(n, n);
      } else {
        // Row sum (n-1)*off + diag = 1 identically in c, so each block is
        // doubly stochastic with no tolerance needed.
        t.block(k, l).setConstant(off);
        t.block(k, l).diagonal().setConstant(diag);
      }
    }
  }
  return t;
}

TransitionTable krsw_table(int n) {
  if (n < 2) throw std::invalid_argument("table dimension must be >= 2");
  return two_value_table(n, 1.0 / (static_cast<double>(n) * n));
}

double mub_deviation(const MeasurementDesign& d) {
  require_design(d);
  const double target = 1.0 / d.n;
  double worst = 0.0;
  for (int k = 0; k <= d.n; ++k)
    for (int l = 0; l <= d.n; ++l) {
      if (k == l) continue;
      for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) {
          const double s = std::norm(d.bases[k].vectors.col(i).dot(d.bases[l].vectors.col(j)));
          worst = std::max(worst, std::abs(s - target));
        }
    }
  return worst;
}

}  // namespace tomoinfo
