#include "gme/tensorlinalg.hpp"

#include "gme/error.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <functional>
#include <numeric>

namespace gme {

namespace {

void check_compatible(const PureState &state, const Bipartition &part) {
    if(static_cast<std::size_t>(part.n_parties) != state.n_parties())
        throw InvalidArity("bipartition is for " + std::to_string(part.n_parties) + " parties, state has " +
                           std::to_string(state.n_parties()));
}

std::size_t side_dimension(const PureState &state, std::uint32_t mask) {
    std::size_t d = 1;
    for(std::size_t k = 0; k < state.n_parties(); ++k)
        if(mask >> k & 1u) d *= state.dim(k);
    return d;
}

} // namespace

double SchmidtSpectrum::purity() const noexcept {
    return std::transform_reduce(lambdas_sq.begin(), lambdas_sq.end(), 0.0, std::plus<>{},
                                 [](double l) { return l * l; });
}

double SchmidtSpectrum::linear_entropy() const noexcept {
    // Entries are descending, so the suffix sums accumulate small terms first.
    double suffix = 0.0, total = 0.0, cross = 0.0;
    for(std::size_t i = lambdas_sq.size(); i-- > 0;) {
        cross += lambdas_sq[i] * suffix;
        suffix += lambdas_sq[i];
    }
    total = suffix;
    if(total <= 0.0) return 0.0;
    return std::clamp(2.0 * cross / (total * total), 0.0, 1.0);
}

double SchmidtSpectrum::tail_weight() const noexcept {
    if(lambdas_sq.empty()) return 0.0;
    double tail = 0.0;
    for(std::size_t i = lambdas_sq.size(); i-- > 1;) tail += lambdas_sq[i];
    const double total = tail + lambdas_sq.front();
    return total > 0.0 ? std::clamp(tail / total, 0.0, 1.0) : 0.0;
}

std::size_t dimension_a(const PureState &state, const Bipartition &part) {
    check_compatible(state, part);
    return side_dimension(state, part.subset_a);
}

std::size_t dimension_b(const PureState &state, const Bipartition &part) {
    check_compatible(state, part);
    return side_dimension(state, part.subset_b);
}

std::size_t dimension_min(const PureState &state, const Bipartition &part) {
    return std::min(dimension_a(state, part), dimension_b(state, part));
}

BipartiteReshape reshape(const PureState &state, const Bipartition &part) {
    check_compatible(state, part);
    const auto n     = state.n_parties();
    const auto d_a   = side_dimension(state, part.subset_a);
    const auto d_b   = side_dimension(state, part.subset_b);
    const auto dims  = state.dims();

    // Place value of each party inside its own side's index.
    std::vector<std::size_t> stride(n);
    std::size_t sa = 1, sb = 1;
    for(std::size_t k = n; k-- > 0;) {
        if(part.subset_a >> k & 1u) {
            stride[k] = sa;
            sa *= dims[k];
        } else {
            stride[k] = sb;
            sb *= dims[k];
        }
    }

    BipartiteReshape out;
    out.rows   = static_cast<Eigen::Index>(d_a);
    out.cols   = static_cast<Eigen::Index>(d_b);
    out.matrix = Eigen::MatrixXcd::Zero(out.rows, out.cols);

    const auto amps = state.amplitudes();
    std::vector<std::size_t> digits(n, 0);
    std::size_t a = 0, b = 0;
    for(std::size_t index = 0; index < amps.size(); ++index) {
        out.matrix(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = amps[index];
        // Odometer increment over big-endian digits, updating a and b in step.
        for(std::size_t k = n; k-- > 0;) {
            const bool in_a = (part.subset_a >> k & 1u) != 0;
            auto &side      = in_a ? a : b;
            if(++digits[k] < dims[k]) {
                side += stride[k];
                break;
            }
            side -= (dims[k] - 1) * stride[k];
            digits[k] = 0;
        }
    }
    return out;
}

SchmidtSpectrum schmidt_spectrum(const PureState &state, const Bipartition &part) {
    const auto m = reshape(state, part);
    // Singular values only; U and V are never formed.
    const Eigen::VectorXd sigma = Eigen::BDCSVD<Eigen::MatrixXcd>(m.matrix).singularValues();

    SchmidtSpectrum out;
    out.lambdas_sq.resize(static_cast<std::size_t>(sigma.size()));
    for(Eigen::Index i = 0; i < sigma.size(); ++i) {
        const double s                          = std::max(sigma[i], 0.0);
        out.lambdas_sq[static_cast<std::size_t>(i)] = std::min(s * s, 1.0);
    }
    std::sort(out.lambdas_sq.begin(), out.lambdas_sq.end(), std::greater<>{});
    return out;
}

double reduced_purity(const PureState &state, const Bipartition &part) {
    return std::clamp(schmidt_spectrum(state, part).purity(), 0.0, 1.0);
}

double linear_entropy(const PureState &state, const Bipartition &part) {
    return schmidt_spectrum(state, part).linear_entropy();
}

} // namespace gme
