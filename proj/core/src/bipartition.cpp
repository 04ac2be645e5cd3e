#include "gme/bipartition.hpp"

#include "gme/error.hpp"

#include <algorithm>
#include <bit>

namespace gme {

namespace {

__extension__ typedef unsigned __int128 wide_uint;

std::vector<int> members(std::uint32_t mask) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(mask)));
    for(int k = 0; mask != 0; ++k, mask >>= 1)
        if(mask & 1u) out.push_back(k);
    return out;
}

void append_parties(std::string &out, std::uint32_t mask, bool separate) {
    bool first = true;
    for(int p : members(mask)) {
        if(separate && !first) out += ',';
        out += std::to_string(p);
        first = false;
    }
}

} // namespace

std::vector<int> Bipartition::parties_a() const { return members(subset_a); }
std::vector<int> Bipartition::parties_b() const { return members(subset_b); }

std::string Bipartition::label() const {
    const bool separate = n_parties > 10;
    std::string out;
    append_parties(out, subset_a, separate);
    out += '|';
    append_parties(out, subset_b, separate);
    return out;
}

Bipartition make_bipartition(int n_parties, std::uint32_t subset) {
    if(n_parties < 2 || n_parties > kMaxBipartitionParties)
        throw InvalidArity("bipartitions need 2 <= n <= " + std::to_string(kMaxBipartitionParties) + ", got " +
                           std::to_string(n_parties));
    const std::uint32_t full = (std::uint32_t{1} << n_parties) - 1u;
    if((subset & ~full) != 0) throw InvalidArity("subset mentions parties beyond n");
    if(subset == 0 || subset == full) throw InvalidArity("bipartition sides must be nonempty");
    if((subset & 1u) == 0) subset = full & ~subset;
    return Bipartition{subset, full & ~subset, std::popcount(subset), n_parties};
}

BipartitionSet::BipartitionSet(int n_parties) : n_parties_(n_parties) {
    if(n_parties < 2 || n_parties > kMaxBipartitionParties)
        throw InvalidArity("bipartitions need 2 <= n <= " + std::to_string(kMaxBipartitionParties) + ", got " +
                           std::to_string(n_parties));
    const std::uint32_t full = (std::uint32_t{1} << n_parties) - 1u;
    partitions_.reserve((std::size_t{1} << (n_parties - 1)) - 1);
    // Odd masks are exactly the subsets containing party 0; drop the full set.
    for(std::uint32_t a = 1; a < full; a += 2) partitions_.push_back(Bipartition{a, full & ~a, std::popcount(a), n_parties});
    std::stable_sort(partitions_.begin(), partitions_.end(), [](const Bipartition &l, const Bipartition &r) {
        return l.size_a != r.size_a ? l.size_a < r.size_a : l.subset_a < r.subset_a;
    });
}

BipartitionSet enumerate_bipartitions(int n) { return BipartitionSet(n); }

std::uint64_t binomial(int n, int k) {
    if(n < 0 || n > 64) throw InvalidArity("binomial supports 0 <= n <= 64");
    if(k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    wide_uint acc = 1;
    for(int i = 1; i <= k; ++i) acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t cardinality_formula(int n) {
    if(n < 2 || n > 64) throw InvalidArity("cardinality_formula supports 2 <= n <= 64");
    std::uint64_t total = 0;
    if(n % 2 == 1) {
        for(int m = 1; m <= (n - 1) / 2; ++m) total += binomial(n, m);
    } else {
        for(int m = 1; m <= (n - 2) / 2; ++m) total += binomial(n, m);
        total += binomial(n, n / 2) / 2;
    }
    return total;
}

} // namespace gme
