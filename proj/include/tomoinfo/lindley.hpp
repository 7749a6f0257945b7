// Discrete Lindley information of an experiment: per-outcome gain, average
// gain (the mutual information between parameter and outcome), and the
// bridge from measurement designs to experiments.
#pragma once

#include <vector>

#include "tomoinfo/bases.hpp"

namespace tomoinfo {

enum class LogBase { bits, nats };

// Finite prior p(theta) together with the conditional outcome law p(x|theta).
// Rows of `conditional` are outcomes x, columns are parameter values theta;
// every column sums to 1.
struct DiscreteExperiment {
  RVector prior;
  RMatrix conditional;

  int parameter_count() const { return static_cast<int>(prior.size()); }
  int outcome_count() const { return static_cast<int>(conditional.rows()); }
};

void require_experiment(const DiscreteExperiment& e);

// Outcome distribution p(x) = sum_theta p(theta) p(x|theta).
RVector marginal(const DiscreteExperiment& e);

// Information gained by observing one outcome:
// sum_theta p(theta|x) log p(theta|x) - sum_theta p(theta) log p(theta),
// with 0 log 0 = 0. May be negative. Rejects outcomes of zero marginal
// probability.
double pointwise_info(const DiscreteExperiment& e, int outcome,
                      LogBase base = LogBase::bits);

// Expected information gain; nonnegative, equal to the marginal-weighted mean
// of pointwise_info and to the mutual information between parameter and
// outcome.
double average_info(const DiscreteExperiment& e, LogBase base = LogBase::bits);

// Experiment induced by measuring states rho_theta in the given bases, each
// basis applied to an equal share of the ensemble: outcome (k,i) has
// p((k,i)|theta) = tr(P_i^k rho_theta) / #bases. Outcome rows are ordered
// k-major. Accepts any number of bases >= 1 (a design contributes its n+1).
DiscreteExperiment design_experiment(const std::vector<OrthonormalBasis>& bases,
                                     const std::vector<CMatrix>& states,
                                     const RVector& prior);
DiscreteExperiment design_experiment(const MeasurementDesign& d,
                                     const std::vector<CMatrix>& states,
                                     const RVector& prior);

}  // namespace tomoinfo
