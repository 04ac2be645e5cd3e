#include "gme/closedform.hpp"

#include "gme/bipartition.hpp"
#include "gme/error.hpp"

#include <cmath>
#include <string>

namespace gme::closed_form {

namespace {

void check_n(int n) {
    if(n < 2 || n > kMaxQubits)
        throw InvalidArity("closed forms need 2 <= n <= " + std::to_string(kMaxQubits) + ", got " + std::to_string(n));
}

void check_m(int n, int m) {
    check_n(n);
    if(m < 1 || m > n / 2)
        throw InvalidArity("cut size m must satisfy 1 <= m <= n/2, got m=" + std::to_string(m) +
                           " for n=" + std::to_string(n));
}

template<typename Concurrence>
ClosedFormRow assemble(int n, Concurrence &&concurrence_m) {
    check_n(n);
    ClosedFormRow row;
    row.n = n;
    for(int m = 1; m <= n / 2; ++m) {
        std::uint64_t mult = binomial(n, m);
        if(2 * m == n) mult /= 2;
        const double c = concurrence_m(n, m);
        row.concurrences_by_m.push_back({m, mult, c});
        row.cardinality += mult;
        row.log_product += static_cast<double>(mult) * std::log(c);
    }
    row.gbc = std::exp(row.log_product / static_cast<double>(row.cardinality));
    return row;
}

} // namespace

double ghz_concurrence_m(int n, int m) {
    check_m(n, m);
    const double d_min = std::ldexp(1.0, m);
    return std::sqrt(d_min / (2.0 * (d_min - 1.0)));
}

double w_concurrence_m(int n, int m) {
    check_m(n, m);
    const double nd = n, md = m;
    const double d_min = std::ldexp(1.0, m);
    return std::sqrt((md * nd - md * md) * 2.0 * d_min / ((d_min - 1.0) * nd * nd));
}

ClosedFormRow gbc_ghz(int n) { return assemble(n, ghz_concurrence_m); }
ClosedFormRow gbc_w(int n) { return assemble(n, w_concurrence_m); }

double ratio_w_over_ghz(int n) {
    const auto w   = gbc_w(n);
    const auto ghz = gbc_ghz(n);
    return std::exp((w.log_product - ghz.log_product) / static_cast<double>(w.cardinality));
}

} // namespace gme::closed_form
