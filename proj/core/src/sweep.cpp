#include "gme/sweep.hpp"

#include "gme/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace gme::sweep {

namespace {

std::string lower(std::string_view text) {
    std::string out(text);
    for(auto &ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return out;
}

double column(const SweepRow &row, Measure m) {
    const auto &v = row[m];
    if(!v) throw std::invalid_argument("sweep has no " + std::string(to_string(m)) + " column");
    return *v;
}

SweepRow evaluate_row(const SweepSpec &spec, double theta) {
    const auto report = full_report(make_state(spec.family, theta), {spec.regularization, 1});
    SweepRow row{spec.family, theta, {}};
    for(auto m : spec.measures) row[m] = measure_value(report, m);
    return row;
}

int sign(double v, double eps) { return v > eps ? 1 : (v < -eps ? -1 : 0); }

} // namespace

std::string_view to_string(Family family) noexcept {
    switch(family) {
        case Family::A: return "a";
        case Family::B: return "b";
        case Family::C: return "c";
    }
    return "?";
}

std::string_view to_string(Measure measure) noexcept {
    switch(measure) {
        case Measure::Gbc: return "gbc";
        case Measure::Gmc: return "gmc";
        case Measure::Ggm: return "ggm";
        case Measure::Fill: return "fill";
    }
    return "?";
}

std::string_view to_string(FindingKind kind) noexcept {
    return kind == FindingKind::EqualXDifferentY ? "equal-x-different-y" : "opposite-slope-interval";
}

Family parse_family(std::string_view text) {
    const auto t = lower(text);
    if(t == "a") return Family::A;
    if(t == "b") return Family::B;
    if(t == "c") return Family::C;
    throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected a, b or c)");
}

Measure parse_measure(std::string_view text) {
    const auto t = lower(text);
    for(auto m : kAllMeasures)
        if(t == to_string(m)) return m;
    throw std::invalid_argument("unknown measure '" + std::string(text) + "' (expected gbc, gmc, ggm or fill)");
}

std::vector<Measure> parse_measure_list(std::string_view text) {
    std::vector<Measure> out;
    std::size_t start = 0;
    while(start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if(token.empty()) throw std::invalid_argument("empty entry in measure list");
        const auto m = parse_measure(token);
        if(std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
        if(comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

int family_parties(Family family) noexcept { return family == Family::C ? 4 : 3; }

PureState make_state(Family family, double theta) {
    switch(family) {
        case Family::A: return make_family_a(theta);
        case Family::B: return make_family_b(theta);
        case Family::C: return make_family_c(theta);
    }
    throw std::invalid_argument("unknown family");
}

double measure_value(const MeasureReport &report, Measure measure) {
    switch(measure) {
        case Measure::Gbc: return report.gbc;
        case Measure::Gmc: return report.gmc;
        case Measure::Ggm: return report.ggm;
        case Measure::Fill:
            if(!report.fill) throw UnsupportedShape("concurrence fill is defined for three-qubit states only");
            return *report.fill;
    }
    throw std::invalid_argument("unknown measure");
}

double evaluate(Family family, double theta, Measure measure, Regularization regularization) {
    return measure_value(full_report(make_state(family, theta), {regularization, 1}), measure);
}

std::vector<Measure> default_measures(Family family) {
    std::vector<Measure> out{Measure::Gbc, Measure::Gmc, Measure::Ggm};
    if(family_parties(family) == 3) out.push_back(Measure::Fill);
    return out;
}

void validate(const SweepSpec &spec) {
    if(spec.steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
    if(!std::isfinite(spec.theta_min) || !std::isfinite(spec.theta_max) || !(spec.theta_min < spec.theta_max))
        throw std::invalid_argument("sweep needs finite theta_min < theta_max");
    if(spec.measures.empty()) throw std::invalid_argument("sweep needs at least one measure");
    const bool wants_fill = std::find(spec.measures.begin(), spec.measures.end(), Measure::Fill) != spec.measures.end();
    if(wants_fill && family_parties(spec.family) != 3)
        throw UnsupportedShape("concurrence fill is only defined for the three-qubit families a and b");
}

std::vector<SweepRow> run_sweep(const SweepSpec &spec) {
    validate(spec);
    const auto steps = static_cast<std::size_t>(spec.steps);
    const double h   = (spec.theta_max - spec.theta_min) / static_cast<double>(steps - 1);
    auto theta_at    = [&](std::size_t i) {
        return i + 1 == steps ? spec.theta_max : spec.theta_min + static_cast<double>(i) * h;
    };

    std::vector<SweepRow> rows(steps);
    unsigned threads = spec.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : spec.threads;
    threads          = static_cast<unsigned>(std::min<std::size_t>(threads, steps));
    if(threads <= 1) {
        for(std::size_t i = 0; i < steps; ++i) rows[i] = evaluate_row(spec, theta_at(i));
        return rows;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        for(unsigned t = 0; t < threads; ++t)
            workers.emplace_back([&, t] {
                try {
                    for(std::size_t i = t; i < steps; i += threads) rows[i] = evaluate_row(spec, theta_at(i));
                } catch(...) {
                    std::lock_guard lock(failure_mutex);
                    if(!failure) failure = std::current_exception();
                }
            });
    }
    if(failure) std::rethrow_exception(failure);
    return rows;
}

Peak find_peak(std::span<const SweepRow> rows, Measure measure, const PeakOptions &options) {
    if(rows.size() < 3) throw std::invalid_argument("find_peak needs at least 3 rows");
    std::vector<double> v(rows.size());
    for(std::size_t i = 0; i < rows.size(); ++i) v[i] = column(rows[i], measure);

    const auto best = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
    std::size_t lo = best, hi = best;
    while(lo > 0 && std::abs(v[lo - 1] - v[best]) <= options.plateau_tol) --lo;
    while(hi + 1 < v.size() && std::abs(v[hi + 1] - v[best]) <= options.plateau_tol) ++hi;
    if(hi - lo + 1 > 3) return {0.5 * (rows[lo].theta + rows[hi].theta), v[best], true};

    // The maximum of the continuous curve lies in the cells next to the grid maximum.
    double a = rows[best == 0 ? 0 : best - 1].theta;
    double b = rows[std::min(best + 1, rows.size() - 1)].theta;
    const auto family = rows[best].family;
    auto f = [&](double t) { return evaluate(family, t, measure, options.regularization); };

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while(b - a > options.tolerance) {
        if(fc >= fd) {
            b  = d;
            d  = c;
            fd = fc;
            c  = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a  = c;
            c  = d;
            fc = fd;
            d  = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double theta = 0.5 * (a + b);
    const double value = f(theta);
    if(value < v[best]) return {rows[best].theta, v[best], false};
    return {theta, value, false};
}

std::vector<OrderingFinding> find_opposite_slope_intervals(std::span<const SweepRow> rows, Measure x, Measure y) {
    constexpr double eps = 1e-12;
    std::vector<OrderingFinding> out;
    if(rows.size() < 2) return out;
    std::size_t i = 0;
    while(i + 1 < rows.size()) {
        auto opposite = [&](std::size_t k) {
            const int sx = sign(column(rows[k + 1], x) - column(rows[k], x), eps);
            const int sy = sign(column(rows[k + 1], y) - column(rows[k], y), eps);
            return sx != 0 && sy != 0 && sx == -sy;
        };
        if(!opposite(i)) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while(j + 1 < rows.size() && opposite(j)) ++j;
        OrderingFinding f;
        f.kind     = FindingKind::OppositeSlopeInterval;
        f.family_1 = f.family_2 = rows[i].family;
        f.theta_1  = rows[i].theta;
        f.theta_2  = rows[j].theta;
        f.x        = x;
        f.y        = y;
        f.x_1      = column(rows[i], x);
        f.x_2      = column(rows[j], x);
        f.y_1      = column(rows[i], y);
        f.y_2      = column(rows[j], y);
        out.push_back(f);
        i = j;
    }
    return out;
}

std::vector<OrderingFinding> find_ordering_reversals(std::span<const SweepRow> rows_1, std::span<const SweepRow> rows_2,
                                                     Measure x, Measure y, const ReversalOptions &options) {
    std::vector<OrderingFinding> out;
    auto pair_finding = [&](const SweepRow &r1, double theta_2, Family family_2, double x_2, double y_2, bool refined) {
        OrderingFinding f;
        f.kind     = FindingKind::EqualXDifferentY;
        f.family_1 = r1.family;
        f.family_2 = family_2;
        f.theta_1  = r1.theta;
        f.theta_2  = theta_2;
        f.x        = x;
        f.y        = y;
        f.x_1      = column(r1, x);
        f.x_2      = x_2;
        f.y_1      = column(r1, y);
        f.y_2      = y_2;
        f.refined  = refined;
        return f;
    };

    for(const auto &r1 : rows_1)
        for(const auto &r2 : rows_2)
            if(std::abs(column(r1, x) - column(r2, x)) <= options.match_tol &&
               std::abs(column(r1, y) - column(r2, y)) >= options.sep_min)
                out.push_back(pair_finding(r1, r2.theta, r2.family, column(r2, x), column(r2, y), false));

    if(options.refine) {
        for(const auto &r1 : rows_1) {
            const double target = column(r1, x);
            for(std::size_t j = 0; j + 1 < rows_2.size(); ++j) {
                const double g0 = column(rows_2[j], x) - target;
                const double g1 = column(rows_2[j + 1], x) - target;
                // Cells with a matching endpoint are already covered by the grid pass.
                if(std::abs(g0) <= options.match_tol || std::abs(g1) <= options.match_tol) continue;
                if((g0 < 0) == (g1 < 0)) continue;

                const auto family = rows_2[j].family;
                double a = rows_2[j].theta, b = rows_2[j + 1].theta;
                double ga = g0;
                double theta = 0.5 * (a + b), g = 0.0;
                for(int it = 0; it < 100; ++it) {
                    theta = 0.5 * (a + b);
                    g     = evaluate(family, theta, x, options.regularization) - target;
                    if(std::abs(g) <= 1e-3 * options.match_tol || b - a < 1e-15) break;
                    if((g < 0) == (ga < 0)) {
                        a  = theta;
                        ga = g;
                    } else {
                        b = theta;
                    }
                }
                if(std::abs(g) > options.match_tol) continue;
                const double y_2 = evaluate(family, theta, y, options.regularization);
                if(std::abs(column(r1, y) - y_2) >= options.sep_min)
                    out.push_back(pair_finding(r1, theta, family, target + g, y_2, true));
            }
        }
    }

    auto intervals = find_opposite_slope_intervals(rows_1, x, y);
    out.insert(out.end(), intervals.begin(), intervals.end());
    const bool same_sweep = rows_1.size() == rows_2.size() &&
                            std::equal(rows_1.begin(), rows_1.end(), rows_2.begin(), [](const auto &l, const auto &r) {
                                return l.family == r.family && l.theta == r.theta;
                            });
    if(!same_sweep) {
        intervals = find_opposite_slope_intervals(rows_2, x, y);
        out.insert(out.end(), intervals.begin(), intervals.end());
    }
    return out;
}

std::string to_json(std::span<const OrderingFinding> findings, int indent) {
    auto doc = nlohmann::ordered_json::array();
    for(const auto &f : findings) {
        nlohmann::ordered_json item;
        item["kind"]      = std::string(to_string(f.kind));
        item["x_measure"] = std::string(to_string(f.x));
        item["y_measure"] = std::string(to_string(f.y));
        item["family_1"]  = std::string(to_string(f.family_1));
        item["theta_1"]   = f.theta_1;
        item["x_1"]       = f.x_1;
        item["y_1"]       = f.y_1;
        item["family_2"]  = std::string(to_string(f.family_2));
        item["theta_2"]   = f.theta_2;
        item["x_2"]       = f.x_2;
        item["y_2"]       = f.y_2;
        item["refined"]   = f.refined;
        doc.push_back(std::move(item));
    }
    return doc.dump(indent);
}

} // namespace gme::sweep
