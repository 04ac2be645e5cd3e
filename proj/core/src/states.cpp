#include "gme/states.hpp"

#include "gme/error.hpp"

#include <json.hpp>

#include <bit>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace gme {

namespace {

std::vector<Amplitude> zeros(std::size_t count) { return std::vector<Amplitude>(count, Amplitude{0.0, 0.0}); }

void require_qubit_count(int n, const char *what) {
    if(n < 2) throw InvalidArity(std::string(what) + ": need at least 2 qubits, got " + std::to_string(n));
    if(n > 14) throw InvalidArity(std::string(what) + ": dense states are capped at 14 qubits, got " + std::to_string(n));
}

} // namespace

PureState PureState::from_amplitudes(std::vector<std::size_t> dims, std::vector<Amplitude> amplitudes,
                                     Renormalize renormalize) {
    if(dims.empty()) throw InvalidArity("state needs at least one party");
    std::size_t total = 1;
    for(auto d : dims) {
        if(d < 2) throw InvalidArity("local dimensions must be >= 2, got " + std::to_string(d));
        if(total > kMaxStateDimension / d)
            throw InvalidArity("state dimension exceeds the dense cap of " + std::to_string(kMaxStateDimension));
        total *= d;
    }
    if(amplitudes.size() != total)
        throw InvalidState("expected " + std::to_string(total) + " amplitudes for the given dims, got " +
                           std::to_string(amplitudes.size()));

    double norm_sq = 0.0;
    for(const auto &a : amplitudes) {
        if(!std::isfinite(a.real()) || !std::isfinite(a.imag())) throw InvalidState("amplitudes must be finite");
        norm_sq += std::norm(a);
    }
    const double norm = std::sqrt(norm_sq);
    if(norm == 0.0) throw InvalidState("zero vector is not a state");
    if(std::abs(norm - 1.0) > kNormTolerance && renormalize == Renormalize::No) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "state norm " << norm << " deviates from 1 by more than " << kNormTolerance
            << " (pass renormalize to accept)";
        throw InvalidState(msg.str());
    }
    for(auto &a : amplitudes) a /= norm;
    return PureState(std::move(dims), std::move(amplitudes));
}

bool PureState::all_qubits() const noexcept {
    for(auto d : dims_)
        if(d != 2) return false;
    return true;
}

double PureState::norm() const noexcept {
    double s = 0.0;
    for(const auto &a : amplitudes_) s += std::norm(a);
    return std::sqrt(s);
}

std::size_t PureState::index_of(std::span<const std::size_t> digits) const {
    if(digits.size() != dims_.size()) throw InvalidArity("digit count does not match party count");
    std::size_t index = 0;
    for(std::size_t k = 0; k < dims_.size(); ++k) {
        if(digits[k] >= dims_[k]) throw InvalidArity("digit out of range for party " + std::to_string(k));
        index = index * dims_[k] + digits[k];
    }
    return index;
}

std::vector<std::size_t> PureState::digits_of(std::size_t index) const {
    if(index >= amplitudes_.size()) throw InvalidArity("basis index out of range");
    std::vector<std::size_t> digits(dims_.size());
    for(std::size_t k = dims_.size(); k-- > 0;) {
        digits[k] = index % dims_[k];
        index /= dims_[k];
    }
    return digits;
}

PureState make_ghz(int n) {
    require_qubit_count(n, "make_ghz");
    const std::size_t size = std::size_t{1} << n;
    auto amps              = zeros(size);
    amps.front()           = std::numbers::sqrt2 / 2.0;
    amps.back()            = std::numbers::sqrt2 / 2.0;
    return PureState::from_amplitudes(std::vector<std::size_t>(static_cast<std::size_t>(n), 2), std::move(amps));
}

PureState make_w(int n) {
    require_qubit_count(n, "make_w");
    const std::size_t size = std::size_t{1} << n;
    auto amps              = zeros(size);
    const double value     = 1.0 / std::sqrt(static_cast<double>(n));
    for(int k = 0; k < n; ++k) amps[std::size_t{1} << k] = value;
    return PureState::from_amplitudes(std::vector<std::size_t>(static_cast<std::size_t>(n), 2), std::move(amps));
}

PureState make_family_a(double theta) {
    const double h = std::numbers::sqrt2 / 2.0;
    auto amps      = zeros(8);
    amps[0b000]    = h * std::cos(theta);
    amps[0b100]    = h * std::sin(theta);
    amps[0b111]    = h;
    return PureState::from_amplitudes({2, 2, 2}, std::move(amps));
}

PureState make_family_b(double theta) {
    auto amps   = zeros(8);
    amps[0b000] = std::cos(theta);
    amps[0b111] = std::sin(theta);
    return PureState::from_amplitudes({2, 2, 2}, std::move(amps));
}

PureState make_family_c(double theta) {
    constexpr double mix = 3.0 * std::numbers::pi / 5.0;
    auto amps            = zeros(16);
    amps[0b0100]         = std::sin(theta) * std::cos(mix);
    amps[0b1000]         = std::sin(theta) * std::sin(mix);
    amps[0b0011]         = std::cos(theta);
    return PureState::from_amplitudes({2, 2, 2, 2}, std::move(amps));
}

PureState make_custom(std::vector<std::size_t> dims, std::vector<Amplitude> amplitudes, Renormalize renormalize) {
    return PureState::from_amplitudes(std::move(dims), std::move(amplitudes), renormalize);
}

PureState tensor_product(const PureState &first, const PureState &second, std::uint32_t first_mask) {
    const std::size_t n = first.n_parties() + second.n_parties();
    if(n > 32) throw InvalidArity("tensor_product: too many parties");
    if(static_cast<std::size_t>(std::popcount(first_mask)) != first.n_parties() ||
       (n < 32 && (first_mask >> n) != 0))
        throw InvalidArity("tensor_product: placement mask does not match the first factor");

    std::vector<std::size_t> dims(n);
    std::size_t i = 0, j = 0;
    for(std::size_t k = 0; k < n; ++k) dims[k] = (first_mask >> k & 1u) ? first.dim(i++) : second.dim(j++);

    std::size_t total = 1;
    for(auto d : dims) total *= d;
    if(total > kMaxStateDimension) throw InvalidArity("tensor_product: result exceeds the dense cap");

    std::vector<Amplitude> amps(total);
    std::vector<std::size_t> digits(n), da(first.n_parties()), db(second.n_parties());
    for(std::size_t index = 0; index < total; ++index) {
        std::size_t rest = index;
        for(std::size_t k = n; k-- > 0;) {
            digits[k] = rest % dims[k];
            rest /= dims[k];
        }
        i = j = 0;
        for(std::size_t k = 0; k < n; ++k) {
            if(first_mask >> k & 1u) da[i++] = digits[k];
            else db[j++] = digits[k];
        }
        amps[index] = first[first.index_of(da)] * second[second.index_of(db)];
    }
    return PureState::from_amplitudes(std::move(dims), std::move(amps), Renormalize::Yes);
}

std::string to_json(const PureState &state) {
    nlohmann::json doc;
    doc["dims"]     = std::vector<std::size_t>(state.dims().begin(), state.dims().end());
    auto &re        = doc["re"] = nlohmann::json::array();
    auto &im        = doc["im"] = nlohmann::json::array();
    for(const auto &a : state.amplitudes()) {
        re.push_back(a.real());
        im.push_back(a.imag());
    }
    return doc.dump();
}

PureState state_from_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch(const nlohmann::json::parse_error &e) { throw InvalidState(std::string("state JSON: ") + e.what()); }
    if(!doc.is_object() || !doc.contains("dims") || !doc.contains("re"))
        throw InvalidState("state JSON needs \"dims\" and \"re\" fields");
    try {
        auto dims = doc.at("dims").get<std::vector<std::size_t>>();
        auto re   = doc.at("re").get<std::vector<double>>();
        std::vector<double> im(re.size(), 0.0);
        if(doc.contains("im")) im = doc.at("im").get<std::vector<double>>();
        if(im.size() != re.size()) throw InvalidState("state JSON: \"re\" and \"im\" lengths differ");
        std::vector<Amplitude> amps(re.size());
        for(std::size_t k = 0; k < re.size(); ++k) amps[k] = {re[k], im[k]};
        return make_custom(std::move(dims), std::move(amps));
    } catch(const nlohmann::json::exception &e) { throw InvalidState(std::string("state JSON: ") + e.what()); }
}

PureState load_state_file(const std::string &path) {
    std::ifstream in(path);
    if(!in) throw IoError(path, "cannot open state file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if(in.bad()) throw IoError(path, "read failed");
    return state_from_json(buffer.str());
}

} // namespace gme
