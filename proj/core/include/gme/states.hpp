#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gme {

using Amplitude = std::complex<double>;

// Dense states are capped at 2^14 amplitudes (14 qubits).
inline constexpr std::size_t kMaxStateDimension = std::size_t{1} << 14;
inline constexpr double kNormTolerance = 1e-9;

enum class Renormalize { No, Yes };

// Immutable pure state over n parties with per-party local dimensions.
//
// Basis index convention: party 0 is the most significant digit, so the ket
// |b0 b1 ... b_{n-1}> lives at index sum_k b_k * prod_{j>k} d_j.
class PureState {
  public:
    // Validates shape and norm. A norm within kNormTolerance of 1 is
    // renormalized exactly; a larger deviation throws unless renormalize is Yes.
    static PureState from_amplitudes(std::vector<std::size_t> dims, std::vector<Amplitude> amplitudes,
                                     Renormalize renormalize = Renormalize::No);

    [[nodiscard]] std::size_t n_parties() const noexcept { return dims_.size(); }
    [[nodiscard]] std::span<const std::size_t> dims() const noexcept { return dims_; }
    [[nodiscard]] std::size_t dim(std::size_t party) const { return dims_.at(party); }
    [[nodiscard]] std::size_t dimension() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] const Amplitude &operator[](std::size_t index) const { return amplitudes_[index]; }

    [[nodiscard]] bool all_qubits() const noexcept;
    [[nodiscard]] double norm() const noexcept;

    // Index of the basis state with the given per-party digits.
    [[nodiscard]] std::size_t index_of(std::span<const std::size_t> digits) const;
    // Inverse of index_of.
    [[nodiscard]] std::vector<std::size_t> digits_of(std::size_t index) const;

    friend bool operator==(const PureState &, const PureState &) = default;

  private:
    PureState(std::vector<std::size_t> dims, std::vector<Amplitude> amplitudes)
        : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {}

    std::vector<std::size_t> dims_;
    std::vector<Amplitude> amplitudes_;
};

// (|0...0> + |1...1>)/sqrt(2) on n qubits.
PureState make_ghz(int n);

// Uniform superposition of the n single-excitation kets.
PureState make_w(int n);

// The three-qubit families sweep theta over [0, pi/2]; any real theta is accepted.
//
//   a: (cos t |000> + sin t |100>)/sqrt(2) + |111>/sqrt(2)
//   b: cos t |000> + sin t |111>
PureState make_family_a(double theta);
PureState make_family_b(double theta);

// Four qubits: sin t (cos(3pi/5)|0100> + sin(3pi/5)|1000>) + cos t |0011>.
PureState make_family_c(double theta);

PureState make_custom(std::vector<std::size_t> dims, std::vector<Amplitude> amplitudes,
                      Renormalize renormalize = Renormalize::No);

// Product of the two factors with `first` occupying the parties flagged in
// first_mask (bit k = party k) and `second` the remaining ones, each in
// ascending party order.
PureState tensor_product(const PureState &first, const PureState &second, std::uint32_t first_mask);

// JSON document {"dims":[...],"re":[...],"im":[...]}.
std::string to_json(const PureState &state);
PureState state_from_json(const std::string &text);
PureState load_state_file(const std::string &path);

} // namespace gme
