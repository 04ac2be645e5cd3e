#pragma once

#include "gme/bipartition.hpp"
#include "gme/states.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gme {

// Regularized: sqrt(d_min/(d_min-1) * (1 - tr rho_A^2)), normalized to [0, 1].
// Unregularized: sqrt(2 (1 - tr rho_A^2)).
enum class Regularization { Regularized, Unregularized };

// Concurrences below this are treated as exact zeros by gbc.
inline constexpr double kZeroConcurrence = 1e-12;

struct CutConcurrence {
    Bipartition part;
    double concurrence = 0.0;
};

struct MeasureReport {
    int n_parties = 0;
    std::vector<CutConcurrence> per_bipartition;
    std::uint64_t cardinality = 0;
    // Product of all concurrences. It underflows to 0 for large n, so the
    // log is kept alongside (-inf when some cut is a product).
    double product_p   = 0.0;
    double log_product = 0.0;
    double gbc         = 0.0;
    double gmc         = 0.0;
    double ggm         = 0.0;
    // Only for three-qubit states.
    std::optional<double> fill;
};

struct ReportOptions {
    Regularization regularization = Regularization::Regularized;
    // Worker threads for the per-cut decompositions; 0 picks hardware concurrency.
    // Results do not depend on this value.
    unsigned threads = 1;
};

double concurrence(const PureState &state, const Bipartition &part,
                   Regularization regularization = Regularization::Regularized);

// Geometric mean of the concurrences over every bipartition. Exactly 0 when
// any cut is (numerically) a product.
double gbc(const PureState &state, Regularization regularization = Regularization::Regularized);

// Minimum concurrence over all bipartitions.
double gmc(const PureState &state, Regularization regularization = Regularization::Regularized);

// 1 - max over bipartitions of the largest squared Schmidt coefficient.
double ggm(const PureState &state);

// Three-qubit concurrence fill ((16/3) Q)^(1/4), Q the Heron product of the
// triangle whose sides are the squared one-to-other concurrences. Throws
// UnsupportedShape unless the state is exactly three qubits.
double concurrence_fill(const PureState &state);

MeasureReport full_report(const PureState &state, const ReportOptions &options = {});

std::string to_json(const MeasureReport &report, int indent = 2);

} // namespace gme
