// JSON/CSV serialization shared by the CLI and the tests. Readers are built
// on nlohmann::json and validate on load; writers are hand-rolled so numeric
// output is pinned to 17 significant digits and key order is fixed, making
// repeated runs byte-identical.
#pragma once

#include <string>
#include <vector>

#include "tomoinfo/gram.hpp"
#include "tomoinfo/lindley.hpp"

namespace tomoinfo::io {

// %.17g; non-finite values become JSON null.
std::string format_double(double x);

// {"n": ..., "bases": [[[ [re,im], ... ] x n vectors ] x (n+1)]}
std::string design_json(const MeasurementDesign& d);
MeasurementDesign parse_design(const std::string& text);
MeasurementDesign load_design(const std::string& path);
void save_design(const MeasurementDesign& d, const std::string& path);

// {"n": ..., "synthetic": ..., "s": s[k][l][i][j]}
std::string table_json(const TransitionTable& t);
TransitionTable parse_table(const std::string& text);
TransitionTable load_table(const std::string& path);
void save_table(const TransitionTable& t, const std::string& path);

// True if the JSON object at `path` has a "bases" key (design file) rather
// than an "s" key (table file).
bool is_design_file(const std::string& path);

// {"prior": [...], "conditional": [[...], ...]} with rows = outcomes.
std::string experiment_json(const DiscreteExperiment& e);
DiscreteExperiment parse_experiment(const std::string& text);
DiscreteExperiment load_experiment(const std::string& path);

// {"probabilities": [[...] x (n+1)]}, one n-vector of outcome probabilities
// per basis.
std::string probabilities_json(const std::vector<RVector>& probs);
std::vector<RVector> load_probabilities(const std::string& path);

// Fixed key order: n, detGamma, detGamma0, vd, infoNats, infoLossNats,
// epsilon, lambdaMin, specRadius, lowerBound, boundHolds, singular.
std::string report_json(const InfoReport& r);

std::string closed_form_json(const TwoValueSpectrum& s, double numeric_det,
                             double max_eig_error);

// {"n": ..., "rho": [[[re,im], ...], ...], "residual": ...}
std::string rho_json(const CMatrix& rho, double residual);

std::string lindley_json(const std::vector<double>& pointwise, double average);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace tomoinfo::io
