#include "gme/measures.hpp"

#include "gme/error.hpp"
#include "gme/tensorlinalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace gme {

namespace {

void require_multipartite(const PureState &state) {
    if(state.n_parties() < 2) throw InvalidArity("measures need at least 2 parties");
    if(state.n_parties() > static_cast<std::size_t>(kMaxBipartitionParties))
        throw InvalidArity("too many parties for bipartition enumeration");
}

double concurrence_from_entropy(double linear_entropy, std::size_t d_min, Regularization regularization) {
    const double scale = regularization == Regularization::Regularized
                             ? static_cast<double>(d_min) / static_cast<double>(d_min - 1)
                             : 2.0;
    return std::sqrt(scale * linear_entropy);
}

struct CutData {
    double concurrence = 0.0;
    double tail        = 0.0; // 1 - largest squared Schmidt coefficient
};

CutData analyse_cut(const PureState &state, const Bipartition &part, Regularization regularization) {
    const auto spectrum = schmidt_spectrum(state, part);
    return {concurrence_from_entropy(spectrum.linear_entropy(), dimension_min(state, part), regularization),
            spectrum.tail_weight()};
}

std::vector<CutData> analyse_all(const PureState &state, const BipartitionSet &cuts, const ReportOptions &options) {
    std::vector<CutData> out(cuts.cardinality());
    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    threads          = static_cast<unsigned>(std::min<std::size_t>(threads, out.size()));

    if(threads <= 1) {
        for(std::size_t i = 0; i < out.size(); ++i) out[i] = analyse_cut(state, cuts[i], options.regularization);
        return out;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for(unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&, t] {
                try {
                    for(std::size_t i = t; i < out.size(); i += threads)
                        out[i] = analyse_cut(state, cuts[i], options.regularization);
                } catch(...) {
                    std::lock_guard lock(failure_mutex);
                    if(!failure) failure = std::current_exception();
                }
            });
        }
    }
    if(failure) std::rethrow_exception(failure);
    return out;
}

double heron_fill(double a, double b, double c) {
    constexpr double slack = 1e-10;
    if(a > b + c + slack || b > a + c + slack || c > a + b + slack)
        throw std::domain_error("squared one-to-other concurrences violate the triangle inequality");
    const double q = 0.5 * (a + b + c);
    const double Q = std::max(0.0, q * (q - a) * (q - b) * (q - c));
    return std::min(1.0, std::pow(16.0 / 3.0 * Q, 0.25));
}

} // namespace

double concurrence(const PureState &state, const Bipartition &part, Regularization regularization) {
    return concurrence_from_entropy(linear_entropy(state, part), dimension_min(state, part), regularization);
}

double gbc(const PureState &state, Regularization regularization) {
    return full_report(state, {regularization, 1}).gbc;
}

double gmc(const PureState &state, Regularization regularization) {
    require_multipartite(state);
    double best = std::numeric_limits<double>::infinity();
    for(const auto &part : enumerate_bipartitions(static_cast<int>(state.n_parties())))
        best = std::min(best, concurrence(state, part, regularization));
    return best;
}

double ggm(const PureState &state) {
    require_multipartite(state);
    double smallest_tail = 1.0;
    for(const auto &part : enumerate_bipartitions(static_cast<int>(state.n_parties())))
        smallest_tail = std::min(smallest_tail, schmidt_spectrum(state, part).tail_weight());
    return smallest_tail;
}

double concurrence_fill(const PureState &state) {
    if(state.n_parties() != 3 || !state.all_qubits())
        throw UnsupportedShape("concurrence fill is defined for three-qubit states only");
    // For n = 3 every canonical cut is one party against the other two.
    double side[3];
    std::size_t i = 0;
    for(const auto &part : enumerate_bipartitions(3)) {
        const double c = concurrence(state, part);
        side[i++]      = c * c;
    }
    return heron_fill(side[0], side[1], side[2]);
}

MeasureReport full_report(const PureState &state, const ReportOptions &options) {
    require_multipartite(state);
    const auto cuts = enumerate_bipartitions(static_cast<int>(state.n_parties()));
    const auto data = analyse_all(state, cuts, options);

    MeasureReport report;
    report.n_parties   = static_cast<int>(state.n_parties());
    report.cardinality = cuts.cardinality();
    report.per_bipartition.reserve(cuts.cardinality());

    double log_sum   = 0.0;
    bool has_zero    = false;
    double min_c     = std::numeric_limits<double>::infinity();
    double min_tail  = 1.0;
    // Fixed summation order over the canonical list keeps results independent of threading.
    for(std::size_t i = 0; i < data.size(); ++i) {
        const double c = data[i].concurrence;
        report.per_bipartition.push_back({cuts[i], c});
        min_c     = std::min(min_c, c);
        min_tail  = std::min(min_tail, data[i].tail);
        if(c < kZeroConcurrence) has_zero = true;
        else log_sum += std::log(c);
    }

    if(has_zero) {
        report.log_product = -std::numeric_limits<double>::infinity();
        report.product_p   = 0.0;
        report.gbc         = 0.0;
    } else {
        report.log_product = log_sum;
        report.product_p   = std::exp(log_sum);
        report.gbc         = std::min(1.0, std::exp(log_sum / static_cast<double>(report.cardinality)));
    }
    report.gmc = min_c;
    report.ggm = min_tail;

    if(state.n_parties() == 3 && state.all_qubits()) {
        auto sq = [&](std::size_t k) { return data[k].concurrence * data[k].concurrence; };
        // Both regularizations coincide on qubit one-to-other cuts.
        report.fill = heron_fill(sq(0), sq(1), sq(2));
    }
    return report;
}

std::string to_json(const MeasureReport &report, int indent) {
    nlohmann::ordered_json doc;
    doc["n_parties"]   = report.n_parties;
    doc["cardinality"] = report.cardinality;
    doc["gbc"]         = report.gbc;
    doc["gmc"]         = report.gmc;
    doc["ggm"]         = report.ggm;
    doc["fill"]        = report.fill ? nlohmann::ordered_json(*report.fill) : nlohmann::ordered_json(nullptr);
    doc["product_p"]   = report.product_p;
    // JSON has no infinities; a vanishing product is reported as null.
    doc["log_product"] = std::isfinite(report.log_product) ? nlohmann::ordered_json(report.log_product)
                                                           : nlohmann::ordered_json(nullptr);
    auto &cuts = doc["per_bipartition"] = nlohmann::ordered_json::object();
    for(const auto &entry : report.per_bipartition) cuts[entry.part.label()] = entry.concurrence;
    return doc.dump(indent);
}

} // namespace gme
