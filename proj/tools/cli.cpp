#include "cli.hpp"

#include "gme/closedform.hpp"
#include "gme/error.hpp"
#include "gme/measures.hpp"
#include "gme/states.hpp"
#include "gme/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>

namespace gme::cli {

namespace {

struct MeasureArgs {
    std::string state_file;
    int ghz = 0;
    int w   = 0;
    bool json = false;
    bool unregularized = false;
    unsigned threads = 1;
};

struct SweepArgs {
    std::string family;
    int steps = 201;
    std::string measures;
    std::string out;
    std::string plot;
    double theta_min = 0.0;
    double theta_max = std::numbers::pi / 2.0;
    bool unregularized = false;
    unsigned threads = 1;
};

struct ClosedFormArgs {
    int n_max = 20;
    std::string out;
};

struct OrderingArgs {
    std::string family_x = "a";
    std::string family_y = "b";
    std::string x = "fill";
    std::string y = "gbc";
    double match_tol = 1e-4;
    double sep_min = 1e-2;
    int steps = 201;
    bool no_refine = false;
    std::string out;
};

Regularization regularization(bool unregularized) {
    return unregularized ? Regularization::Unregularized : Regularization::Regularized;
}

void write_text(const std::string &path, const std::string &content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if(!f) throw IoError(path, "cannot open for writing");
    f << content;
    f.flush();
    if(!f) throw IoError(path, "write failed");
}

int do_measure(const MeasureArgs &args, std::ostream &out) {
    std::optional<PureState> state;
    if(!args.state_file.empty()) state = load_state_file(args.state_file);
    else if(args.ghz != 0) state = make_ghz(args.ghz);
    else if(args.w != 0) state = make_w(args.w);
    else throw std::invalid_argument("measure needs one of --state-file, --ghz or --w");

    const auto report = full_report(*state, {regularization(args.unregularized), args.threads});
    if(args.json) {
        out << to_json(report) << '\n';
        return kExitOk;
    }
    out << "parties      " << report.n_parties << '\n';
    out << "bipartitions " << report.cardinality << '\n';
    out << std::setprecision(12);
    out << "gbc          " << report.gbc << '\n';
    out << "gmc          " << report.gmc << '\n';
    out << "ggm          " << report.ggm << '\n';
    if(report.fill) out << "fill         " << *report.fill << '\n';
    if(report.per_bipartition.size() <= 64) {
        out << "concurrences\n";
        for(const auto &cut : report.per_bipartition) out << "  " << std::setw(14) << std::left << cut.part.label() << std::right << cut.concurrence << '\n';
    }
    return kExitOk;
}

int do_sweep(const SweepArgs &args, std::ostream &out) {
    sweep::SweepSpec spec;
    spec.family         = sweep::parse_family(args.family);
    spec.steps          = args.steps;
    spec.theta_min      = args.theta_min;
    spec.theta_max      = args.theta_max;
    spec.measures       = args.measures.empty() ? sweep::default_measures(spec.family) : sweep::parse_measure_list(args.measures);
    spec.regularization = regularization(args.unregularized);
    spec.threads        = args.threads;

    const auto rows = sweep::run_sweep(spec);
    sweep::emit_csv(rows, args.out);
    if(!args.plot.empty()) sweep::emit_plotscript(rows, args.out, args.plot);

    out << "wrote " << rows.size() << " rows to " << args.out << '\n';
    if(rows.size() >= 3) {
        for(auto m : spec.measures) {
            const auto peak = sweep::find_peak(rows, m, {spec.regularization});
            out << "peak " << sweep::to_string(m) << " theta=" << sweep::format_number(peak.theta)
                << " value=" << sweep::format_number(peak.value) << (peak.plateau ? " (plateau)" : "") << '\n';
        }
    }
    return kExitOk;
}

int do_closed_form(const ClosedFormArgs &args, std::ostream &out) {
    sweep::emit_closed_form_csv(args.n_max, args.out);
    out << "wrote n=2.." << args.n_max << " to " << args.out << '\n';
    return kExitOk;
}

int do_ordering(const OrderingArgs &args, std::ostream &out) {
    const auto x = sweep::parse_measure(args.x);
    const auto y = sweep::parse_measure(args.y);
    auto sweep_of = [&](const std::string &family_name) {
        sweep::SweepSpec spec;
        spec.family   = sweep::parse_family(family_name);
        spec.steps    = args.steps;
        spec.measures = {x};
        if(y != x) spec.measures.push_back(y);
        return sweep::run_sweep(spec);
    };
    const auto rows_x = sweep_of(args.family_x);
    const auto rows_y = sweep_of(args.family_y);
    if(!(args.match_tol >= 0.0) || !(args.sep_min >= 0.0))
        throw std::invalid_argument("--match-tol and --sep-min must be non-negative");

    sweep::ReversalOptions options;
    options.match_tol = args.match_tol;
    options.sep_min   = args.sep_min;
    options.refine    = !args.no_refine;
    const auto findings = sweep::find_ordering_reversals(rows_x, rows_y, x, y, options);

    nlohmann::ordered_json doc;
    doc["family_x"]  = args.family_x;
    doc["family_y"]  = args.family_y;
    doc["x"]         = std::string(sweep::to_string(x));
    doc["y"]         = std::string(sweep::to_string(y));
    doc["match_tol"] = args.match_tol;
    doc["sep_min"]   = args.sep_min;
    doc["steps"]     = args.steps;
    doc["findings"]  = nlohmann::ordered_json::parse(sweep::to_json(findings));
    write_text(args.out, doc.dump(2) + "\n");
    out << "wrote " << findings.size() << " findings to " << args.out << '\n';
    return kExitOk;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Geometric mean of bipartite concurrences and related multipartite entanglement measures", "gme"};
    app.require_subcommand(1);

    MeasureArgs measure_args;
    auto *measure = app.add_subcommand("measure", "Report all measures for one pure state");
    auto *state_file = measure->add_option("--state-file", measure_args.state_file, "JSON state {\"dims\",\"re\",\"im\"}");
    auto *ghz = measure->add_option("--ghz", measure_args.ghz, "n-qubit GHZ state")->check(CLI::Range(2, 14));
    auto *w   = measure->add_option("--w", measure_args.w, "n-qubit W state")->check(CLI::Range(2, 14));
    state_file->excludes(ghz, w);
    ghz->excludes(w);
    measure->add_flag("--json", measure_args.json, "Emit the report as JSON");
    measure->add_flag("--unregularized", measure_args.unregularized, "Use sqrt(2(1 - tr rho^2)) for every cut");
    measure->add_option("--threads", measure_args.threads, "Worker threads (0 = all cores)");

    SweepArgs sweep_args;
    auto *sweep_cmd = app.add_subcommand("sweep", "Sweep theta over one state family and write a CSV");
    sweep_cmd->add_option("--family", sweep_args.family, "a, b or c")->required();
    sweep_cmd->add_option("--steps", sweep_args.steps, "Grid points")->capture_default_str();
    sweep_cmd->add_option("--measures", sweep_args.measures, "Comma list of gbc,gmc,ggm,fill");
    sweep_cmd->add_option("--out", sweep_args.out, "Output CSV")->required();
    sweep_cmd->add_option("--plot", sweep_args.plot, "Also write a gnuplot script");
    sweep_cmd->add_option("--theta-min", sweep_args.theta_min)->capture_default_str();
    sweep_cmd->add_option("--theta-max", sweep_args.theta_max)->capture_default_str();
    sweep_cmd->add_flag("--unregularized", sweep_args.unregularized);
    sweep_cmd->add_option("--threads", sweep_args.threads, "Worker threads (0 = all cores)");

    ClosedFormArgs cf_args;
    auto *closed = app.add_subcommand("closed-form", "GHZ/W closed-form GBC table");
    closed->add_option("--n-max", cf_args.n_max, "Largest qubit count")->required()->check(CLI::Range(2, closed_form::kMaxQubits));
    closed->add_option("--out", cf_args.out, "Output CSV")->required();

    OrderingArgs ord_args;
    auto *ordering = app.add_subcommand("ordering", "Mine entanglement-ordering reversals between two families");
    ordering->add_option("--family-x", ord_args.family_x)->capture_default_str();
    ordering->add_option("--family-y", ord_args.family_y)->capture_default_str();
    ordering->add_option("--x", ord_args.x, "Measure that must match")->capture_default_str();
    ordering->add_option("--y", ord_args.y, "Measure that must differ")->capture_default_str();
    ordering->add_option("--match-tol", ord_args.match_tol)->capture_default_str();
    ordering->add_option("--sep-min", ord_args.sep_min)->capture_default_str();
    ordering->add_option("--steps", ord_args.steps)->capture_default_str();
    ordering->add_flag("--no-refine", ord_args.no_refine, "Only compare grid points");
    ordering->add_option("--out", ord_args.out, "Output JSON")->required();

    try {
        app.parse(argc, argv);
    } catch(const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidArgs;
    }

    try {
        if(*measure) return do_measure(measure_args, out);
        if(*sweep_cmd) return do_sweep(sweep_args, out);
        if(*closed) return do_closed_form(cf_args, out);
        if(*ordering) return do_ordering(ord_args, out);
    } catch(const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kExitIoError;
    } catch(const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidArgs;
    } catch(const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitIoError;
    }
    return kExitInvalidArgs;
}

} // namespace gme::cli
