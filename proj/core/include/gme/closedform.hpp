#pragma once

#include <cstdint>
#include <vector>

// Analytic GBC of n-qubit GHZ and W states. Every quantity is assembled in the
// log domain, so n may go well past what a dense state vector can hold.
namespace gme::closed_form {

inline constexpr int kMaxQubits = 64;

struct CutClass {
    int m = 0;                     // size of the smaller side
    std::uint64_t multiplicity = 0; // C(n, m), halved for the balanced class
    double concurrence = 0.0;
};

struct ClosedFormRow {
    int n = 0;
    std::vector<CutClass> concurrences_by_m;
    std::uint64_t cardinality = 0;
    double log_product = 0.0;
    double gbc = 0.0;
};

// sqrt(2^m / (2 (2^m - 1))), the same for every m-vs-rest cut of GHZ_n.
double ghz_concurrence_m(int n, int m);

// sqrt((mn - m^2) 2^(m+1) / ((2^m - 1) n^2)) for W_n.
double w_concurrence_m(int n, int m);

ClosedFormRow gbc_ghz(int n);
ClosedFormRow gbc_w(int n);

// G(W_n) / G(GHZ_n).
double ratio_w_over_ghz(int n);

} // namespace gme::closed_form
