#include "gme/error.hpp"
#include "gme/sweep.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace gme;
using namespace gme::sweep;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<SweepRow> sweep_of(Family f, std::vector<Measure> measures, int steps = 201, unsigned threads = 1) {
    SweepSpec spec;
    spec.family   = f;
    spec.measures = std::move(measures);
    spec.steps    = steps;
    spec.threads  = threads;
    return run_sweep(spec);
}

std::size_t count_lines(const std::string &s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(Parse, NamesRoundTrip) {
    EXPECT_EQ(parse_family("B"), Family::B);
    EXPECT_EQ(parse_measure("Fill"), Measure::Fill);
    EXPECT_EQ(parse_measure_list("gbc,gmc,gbc"), (std::vector<Measure>{Measure::Gbc, Measure::Gmc}));
    EXPECT_THROW(parse_family("d"), std::invalid_argument);
    EXPECT_THROW(parse_measure_list("gbc,,gmc"), std::invalid_argument);
    EXPECT_THROW(parse_measure("entropy"), std::invalid_argument);
}

TEST(Sweep, GridAndFamilyB) {
    const auto rows = sweep_of(Family::B, {Measure::Gbc});
    ASSERT_EQ(rows.size(), 201u);
    EXPECT_EQ(rows.front().theta, 0.0);
    EXPECT_EQ(rows.back().theta, kPi / 2);
    EXPECT_NEAR(rows[37].theta, 37 * (kPi / 2) / 200, 1e-15);
    EXPECT_EQ(*rows[0][Measure::Gbc], 0.0);
    EXPECT_NEAR(*rows[100][Measure::Gbc], 1.0, 1e-12);
    EXPECT_FALSE(rows[0][Measure::Gmc].has_value());
}

TEST(Sweep, FamilyAStartsAtGhz) {
    const auto rows = sweep_of(Family::A, default_measures(Family::A), 5);
    EXPECT_NEAR(*rows[0][Measure::Gbc], 1.0, 1e-12);
    EXPECT_NEAR(*rows[0][Measure::Gmc], 1.0, 1e-12);
    EXPECT_NEAR(*rows[0][Measure::Fill], 1.0, 1e-12);
    EXPECT_NEAR(*rows[0][Measure::Ggm], 0.5, 1e-12);
}

TEST(Sweep, FamilyCStartsAsProduct) {
    const auto rows = sweep_of(Family::C, {Measure::Gbc}, 11);
    EXPECT_EQ(*rows[0][Measure::Gbc], 0.0);
    EXPECT_GT(*rows[5][Measure::Gbc], 0.0);
}

TEST(Sweep, Validation) {
    EXPECT_THROW(sweep_of(Family::C, {Measure::Fill}), UnsupportedShape);
    EXPECT_THROW(sweep_of(Family::A, {Measure::Gbc}, 1), std::invalid_argument);
    EXPECT_THROW(sweep_of(Family::A, {}), std::invalid_argument);
    SweepSpec bad;
    bad.theta_min = 1.0;
    bad.theta_max = 1.0;
    EXPECT_THROW(run_sweep(bad), std::invalid_argument);
}

TEST(Sweep, ValuesInUnitInterval) {
    for(auto f : {Family::A, Family::B, Family::C})
        for(const auto &row : sweep_of(f, default_measures(f), 101))
            for(const auto &v : row.values)
                if(v) {
                    EXPECT_GE(*v, 0.0);
                    EXPECT_LE(*v, 1.0);
                }
}

TEST(Sweep, FamilyBIsSymmetricAboutQuarterPi) {
    const auto rows = sweep_of(Family::B, {Measure::Gbc});
    for(std::size_t i = 0; i < rows.size(); ++i)
        EXPECT_NEAR(*rows[i][Measure::Gbc], *rows[rows.size() - 1 - i][Measure::Gbc], 1e-10);
}

TEST(Sweep, ParallelMatchesSequentialByteForByte) {
    const auto seq = sweep_of(Family::C, default_measures(Family::C), 201, 1);
    const auto par = sweep_of(Family::C, default_measures(Family::C), 201, 4);
    EXPECT_EQ(to_csv(seq), to_csv(par));
    EXPECT_EQ(to_csv(seq), to_csv(sweep_of(Family::C, default_measures(Family::C), 201, 1)));
}

TEST(Peak, FamilyBAtQuarterPi) {
    const auto rows = sweep_of(Family::B, {Measure::Gbc}, 37);  // grid misses pi/4
    const auto peak = find_peak(rows, Measure::Gbc);
    EXPECT_FALSE(peak.plateau);
    EXPECT_NEAR(peak.theta, kPi / 4, 1e-6);
    EXPECT_NEAR(peak.value, 1.0, 1e-10);
}

// Reference peak positions from an independent numpy/scipy bounded scalar search.
TEST(Peak, FamilyCPeaks) {
    const auto rows = sweep_of(Family::C, {Measure::Gbc, Measure::Gmc, Measure::Ggm});
    const auto p1   = find_peak(rows, Measure::Gbc);
    const auto p2   = find_peak(rows, Measure::Ggm);
    const auto p3   = find_peak(rows, Measure::Gmc);
    EXPECT_NEAR(p1.theta, 0.8456779369, 2e-6);
    EXPECT_NEAR(p3.theta, 1.1999217543, 2e-6);
    EXPECT_NEAR(p2.theta, 1.2710877210, 2e-6);
    EXPECT_LT(p1.theta, p3.theta);
    EXPECT_NEAR(p1.value, 0.8259144814, 1e-9);
}

TEST(Peak, ConstantColumnIsPlateau) {
    std::vector<SweepRow> rows(9);
    for(std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].family          = Family::C;
        rows[i].theta           = 0.1 * static_cast<double>(i);
        rows[i][Measure::Gbc]   = 0.0;
    }
    const auto peak = find_peak(rows, Measure::Gbc);
    EXPECT_TRUE(peak.plateau);
    EXPECT_NEAR(peak.theta, 0.4, 1e-15);
}

TEST(Peak, Preconditions) {
    const auto rows = sweep_of(Family::B, {Measure::Gbc}, 2);
    EXPECT_THROW(find_peak(rows, Measure::Gbc), std::invalid_argument);
    const auto more = sweep_of(Family::B, {Measure::Gbc}, 5);
    EXPECT_THROW(find_peak(more, Measure::Gmc), std::invalid_argument);
}

TEST(Reversals, FillAgainstGbc) {
    const auto a = sweep_of(Family::A, {Measure::Fill, Measure::Gbc});
    const auto b = sweep_of(Family::B, {Measure::Fill, Measure::Gbc});
    const auto findings = find_ordering_reversals(a, b, Measure::Fill, Measure::Gbc);
    std::size_t pairs = 0;
    for(const auto &f : findings) {
        if(f.kind != FindingKind::EqualXDifferentY) continue;
        ++pairs;
        EXPECT_EQ(f.family_1, Family::A);
        EXPECT_EQ(f.family_2, Family::B);
        EXPECT_LE(std::abs(f.x_1 - f.x_2), 1e-4);
        EXPECT_GE(std::abs(f.y_1 - f.y_2), 1e-2);
        // Re-evaluate the matched type-B state independently of the miner.
        EXPECT_NEAR(evaluate(Family::B, f.theta_2, Measure::Fill), f.x_2, 1e-12);
        EXPECT_NEAR(evaluate(Family::B, f.theta_2, Measure::Gbc), f.y_2, 1e-12);
        // Equal fill, the type-A state carries more GBC.
        EXPECT_GT(f.y_1, f.y_2);
    }
    EXPECT_GT(pairs, 0u);
}

TEST(Reversals, GridOnlyModeComparesGridPoints) {
    const auto a = sweep_of(Family::A, {Measure::Gmc, Measure::Gbc});
    const auto b = sweep_of(Family::B, {Measure::Gmc, Measure::Gbc});
    ReversalOptions opts;
    opts.refine = false;
    const auto findings = find_ordering_reversals(a, b, Measure::Gmc, Measure::Gbc, opts);
    std::size_t pairs = 0;
    for(const auto &f : findings) {
        if(f.kind != FindingKind::EqualXDifferentY) continue;
        ++pairs;
        EXPECT_FALSE(f.refined);
        EXPECT_GT(f.y_1, f.y_2);
    }
    EXPECT_GT(pairs, 0u);
}

TEST(Reversals, IdenticalSweepsGiveNothing) {
    const auto a = sweep_of(Family::A, {Measure::Gbc});
    EXPECT_TRUE(find_ordering_reversals(a, a, Measure::Gbc, Measure::Gbc).empty());
}

TEST(Reversals, MissingColumnIsRejected) {
    const auto a = sweep_of(Family::A, {Measure::Gbc}, 5);
    EXPECT_THROW(find_ordering_reversals(a, a, Measure::Fill, Measure::Gbc), std::invalid_argument);
}

TEST(Reversals, OppositeSlopeOnFamilyC) {
    const auto rows = sweep_of(Family::C, {Measure::Gbc, Measure::Gmc});
    const auto intervals = find_opposite_slope_intervals(rows, Measure::Gbc, Measure::Gmc);
    ASSERT_FALSE(intervals.empty());
    const auto widest = *std::max_element(intervals.begin(), intervals.end(), [](const auto &l, const auto &r) {
        return l.theta_2 - l.theta_1 < r.theta_2 - r.theta_1;
    });
    // Spans the stretch between the gbc peak and the gmc peak.
    EXPECT_NEAR(widest.theta_1, 0.8456779369, 1e-2);
    EXPECT_NEAR(widest.theta_2, 1.1999217543, 1e-2);
    EXPECT_GT(widest.y_2, widest.y_1);
    EXPECT_LT(widest.x_2, widest.x_1);
}

TEST(Reversals, Json) {
    const auto a = sweep_of(Family::A, {Measure::Gmc, Measure::Gbc}, 21);
    const auto b = sweep_of(Family::B, {Measure::Gmc, Measure::Gbc}, 21);
    const auto text = to_json(find_ordering_reversals(a, b, Measure::Gmc, Measure::Gbc));
    EXPECT_EQ(text.front(), '[');
    EXPECT_NE(text.find("equal-x-different-y"), std::string::npos);
}

TEST(Csv, Layout) {
    const auto rows = sweep_of(Family::B, {Measure::Gbc});
    const auto csv  = to_csv(rows);
    EXPECT_EQ(count_lines(csv), 202u);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "family,theta,gbc,gmc,ggm,fill");
    // theta = pi/400 with 12 significant digits, only the gbc column filled.
    const auto second = csv.substr(csv.find('\n', csv.find('\n') + 1) + 1);
    EXPECT_EQ(second.substr(0, second.find(',', 2)), "b,0.00785398163397");
    EXPECT_NE(second.find(",,,\n"), std::string::npos);
    EXPECT_EQ(to_csv({}), "family,theta,gbc,gmc,ggm,fill\n");
}

TEST(Csv, ShortestRoundTripNumbers) {
    EXPECT_EQ(format_number(0.5), "0.5");
    const double x = 0.1 + 0.2;
    EXPECT_EQ(std::stod(format_number(x)), x);
}

TEST(Csv, ClosedFormTable) {
    const auto csv = closed_form_csv(20);
    EXPECT_EQ(count_lines(csv), 20u);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,gbc_ghz,gbc_w,ratio");
    EXPECT_EQ(csv.substr(csv.find('\n') + 1, 8), "2,1,1,1\n");
    EXPECT_THROW(closed_form_csv(1), InvalidArity);
}

TEST(Csv, FilesAndPlotScript) {
    const auto dir = std::filesystem::temp_directory_path() / "gbc_test_sweep";
    std::filesystem::create_directories(dir);
    const auto rows = sweep_of(Family::A, {Measure::Gbc, Measure::Fill}, 11);
    emit_csv(rows, (dir / "a.csv").string());
    emit_plotscript(rows, (dir / "a.csv").string(), (dir / "a.gp").string());
    EXPECT_EQ(slurp(dir / "a.csv"), to_csv(rows));
    const auto gp = slurp(dir / "a.gp");
    EXPECT_NE(gp.find("a.csv"), std::string::npos);
    EXPECT_NE(gp.find("using 2:3"), std::string::npos);  // gbc
    EXPECT_NE(gp.find("using 2:6"), std::string::npos);  // fill
    EXPECT_EQ(gp.find("using 2:4"), std::string::npos);  // no gmc column
    EXPECT_THROW(emit_csv(rows, "/nonexistent/dir/x.csv"), IoError);
    std::filesystem::remove_all(dir);
}
