#pragma once

#include "gme/bipartition.hpp"
#include "gme/states.hpp"

#include <Eigen/Core>

#include <vector>

namespace gme {

// Amplitudes rearranged as a d_A x d_B matrix: M(a, b) = <a_A b_B|psi>, with
// each side indexed big-endian over its parties in ascending order.
// The reduced state on A is M M^dagger.
struct BipartiteReshape {
    Eigen::Index rows = 0;
    Eigen::Index cols = 0;
    Eigen::MatrixXcd matrix;
};

// Squared Schmidt coefficients (eigenvalues of the reduced state), descending,
// min(d_A, d_B) entries.
struct SchmidtSpectrum {
    std::vector<double> lambdas_sq;

    [[nodiscard]] double largest() const { return lambdas_sq.empty() ? 0.0 : lambdas_sq.front(); }
    [[nodiscard]] double purity() const noexcept;
    // 1 - purity evaluated as 2 sum_{i<j} l_i l_j, which keeps full relative
    // accuracy when the state is close to a product across the cut.
    [[nodiscard]] double linear_entropy() const noexcept;
    // 1 - largest, summed over the trailing coefficients for the same reason.
    [[nodiscard]] double tail_weight() const noexcept;
};

BipartiteReshape reshape(const PureState &state, const Bipartition &part);

// Local dimensions of the two sides and the smaller of them.
std::size_t dimension_a(const PureState &state, const Bipartition &part);
std::size_t dimension_b(const PureState &state, const Bipartition &part);
std::size_t dimension_min(const PureState &state, const Bipartition &part);

SchmidtSpectrum schmidt_spectrum(const PureState &state, const Bipartition &part);

// tr(rho_A^2) from the singular values of the reshaped amplitudes.
double reduced_purity(const PureState &state, const Bipartition &part);

// 1 - tr(rho_A^2), see SchmidtSpectrum::linear_entropy.
double linear_entropy(const PureState &state, const Bipartition &part);

} // namespace gme
