#pragma once

#include "gme/measures.hpp"
#include "gme/states.hpp"

#include <array>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gme::sweep {

enum class Family { A, B, C };
enum class Measure { Gbc, Gmc, Ggm, Fill };

inline constexpr std::array<Measure, 4> kAllMeasures{Measure::Gbc, Measure::Gmc, Measure::Ggm, Measure::Fill};

std::string_view to_string(Family family) noexcept;
std::string_view to_string(Measure measure) noexcept;
// Case-insensitive "a" / "b" / "c"; throws std::invalid_argument otherwise.
Family parse_family(std::string_view text);
Measure parse_measure(std::string_view text);
// Comma-separated list such as "gbc,gmc".
std::vector<Measure> parse_measure_list(std::string_view text);

int family_parties(Family family) noexcept;
PureState make_state(Family family, double theta);
double measure_value(const MeasureReport &report, Measure measure);
double evaluate(Family family, double theta, Measure measure,
                Regularization regularization = Regularization::Regularized);

// Measures applicable to the family (fill only for the three-qubit ones).
std::vector<Measure> default_measures(Family family);

struct SweepSpec {
    Family family     = Family::A;
    double theta_min  = 0.0;
    double theta_max  = std::numbers::pi / 2.0;
    int steps         = 201;
    std::vector<Measure> measures{Measure::Gbc, Measure::Gmc, Measure::Ggm};
    Regularization regularization = Regularization::Regularized;
    // Grid points are independent; 0 picks hardware concurrency.
    unsigned threads = 1;
};

// Throws std::invalid_argument for bad grids and UnsupportedShape for fill on
// a family that is not three qubits.
void validate(const SweepSpec &spec);

struct SweepRow {
    Family family = Family::A;
    double theta  = 0.0;
    std::array<std::optional<double>, 4> values{};

    [[nodiscard]] const std::optional<double> &operator[](Measure m) const {
        return values[static_cast<std::size_t>(m)];
    }
    [[nodiscard]] std::optional<double> &operator[](Measure m) { return values[static_cast<std::size_t>(m)]; }
};

// theta_i = theta_min + i (theta_max - theta_min) / (steps - 1), rows in grid order.
std::vector<SweepRow> run_sweep(const SweepSpec &spec);

struct PeakOptions {
    Regularization regularization = Regularization::Regularized;
    double tolerance = 1e-6;  // final bracket width in radians
    double plateau_tol = 1e-12;
};

struct Peak {
    double theta = 0.0;
    double value = 0.0;
    // Maximum is attained on a run wider than the refinement bracket; theta is
    // the run's midpoint.
    bool plateau = false;
};

// Grid maximum, refined by golden-section search on the continuous family
// inside the neighbouring grid cells. Needs at least 3 rows.
Peak find_peak(std::span<const SweepRow> rows, Measure measure, const PeakOptions &options = {});

enum class FindingKind { EqualXDifferentY, OppositeSlopeInterval };

std::string_view to_string(FindingKind kind) noexcept;

// EqualXDifferentY: a state (family_1, theta_1) from the first sweep and a
// state (family_2, theta_2) from the second with |x_1 - x_2| <= match_tol and
// |y_1 - y_2| >= sep_min.
// OppositeSlopeInterval: on family_1 (== family_2), x and y move in opposite
// directions across every grid cell of [theta_1, theta_2]; x_i, y_i are the
// values at the ends.
struct OrderingFinding {
    FindingKind kind = FindingKind::EqualXDifferentY;
    Family family_1  = Family::A;
    Family family_2  = Family::A;
    double theta_1   = 0.0;
    double theta_2   = 0.0;
    Measure x        = Measure::Gbc;
    Measure y        = Measure::Gbc;
    double x_1 = 0.0, x_2 = 0.0;
    double y_1 = 0.0, y_2 = 0.0;
    // theta_2 was located between grid points by bisection on the second family.
    bool refined = false;
};

struct ReversalOptions {
    double match_tol = 1e-4;
    double sep_min   = 1e-2;
    // Also match x across grid cells of the second sweep where x_2 crosses x_1.
    bool refine = true;
    Regularization regularization = Regularization::Regularized;
};

std::vector<OrderingFinding> find_ordering_reversals(std::span<const SweepRow> rows_1, std::span<const SweepRow> rows_2,
                                                     Measure x, Measure y, const ReversalOptions &options = {});

std::vector<OrderingFinding> find_opposite_slope_intervals(std::span<const SweepRow> rows, Measure x, Measure y);

std::string to_json(std::span<const OrderingFinding> findings, int indent = 2);

// Header "family,theta,gbc,gmc,ggm,fill"; measures not in the sweep are empty fields.
std::string to_csv(std::span<const SweepRow> rows);
void emit_csv(std::span<const SweepRow> rows, const std::string &path);

// Standalone gnuplot script plotting the measure columns present in rows from csv_path.
std::string to_plotscript(std::span<const SweepRow> rows, const std::string &csv_path);
void emit_plotscript(std::span<const SweepRow> rows, const std::string &csv_path, const std::string &path);

// "n,gbc_ghz,gbc_w,ratio" for n = 2 .. n_max.
std::string closed_form_csv(int n_max);
void emit_closed_form_csv(int n_max, const std::string &path);

// Shortest round-trip decimal form.
std::string format_number(double value);

} // namespace gme::sweep
