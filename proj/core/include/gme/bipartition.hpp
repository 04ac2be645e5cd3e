#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gme {

inline constexpr int kMaxBipartitionParties = 20;

// Unordered split {A|B} of n parties. Bit k of a mask stands for party k.
// Canonical form keeps party 0 in A.
struct Bipartition {
    std::uint32_t subset_a = 0;
    std::uint32_t subset_b = 0;
    int size_a             = 0;
    int n_parties          = 0;

    [[nodiscard]] int size_b() const noexcept { return n_parties - size_a; }
    [[nodiscard]] bool contains_a(int party) const noexcept { return (subset_a >> party & 1u) != 0; }
    [[nodiscard]] std::vector<int> parties_a() const;
    [[nodiscard]] std::vector<int> parties_b() const;

    // "01|23". Indices are comma-separated when n exceeds 10 so labels stay unambiguous.
    [[nodiscard]] std::string label() const;

    friend bool operator==(const Bipartition &, const Bipartition &) = default;
};

// Canonical bipartition for subset A (either side may be passed; the result keeps
// party 0 in A). Throws InvalidArity for empty or full subsets.
Bipartition make_bipartition(int n_parties, std::uint32_t subset);

class BipartitionSet {
  public:
    explicit BipartitionSet(int n_parties);

    [[nodiscard]] int n_parties() const noexcept { return n_parties_; }
    [[nodiscard]] std::size_t cardinality() const noexcept { return partitions_.size(); }
    [[nodiscard]] const std::vector<Bipartition> &partitions() const noexcept { return partitions_; }

    [[nodiscard]] auto begin() const noexcept { return partitions_.begin(); }
    [[nodiscard]] auto end() const noexcept { return partitions_.end(); }
    [[nodiscard]] const Bipartition &operator[](std::size_t i) const { return partitions_[i]; }

  private:
    int n_parties_;
    std::vector<Bipartition> partitions_;
};

// All 2^(n-1) - 1 canonical bipartitions, sorted by (size_a, subset_a). 2 <= n <= 20.
BipartitionSet enumerate_bipartitions(int n);

// Exact binomial coefficient, n <= 64.
std::uint64_t binomial(int n, int k);

// Number of bipartitions as the piecewise binomial sum over the size of the
// smaller side; the balanced term for even n counts C(n, n/2)/2. 2 <= n <= 64.
std::uint64_t cardinality_formula(int n);

} // namespace gme
