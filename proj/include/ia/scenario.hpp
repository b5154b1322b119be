#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ia {

/// Problem description for a K-user interference network: per-user transmit
/// antenna counts, receive antenna counts, and stream counts.
struct ScenarioSpec {
    int users = 0;                  // K
    std::vector<int> tx_antennas;   // M_i, one per user
    std::vector<int> rx_antennas;   // N_i
    std::vector<int> streams;       // d_i

    bool operator==(const ScenarioSpec&) const = default;
};

inline void validate_scenario(const ScenarioSpec& spec) {
    if (spec.users < 2) throw std::invalid_argument("scenario: need at least 2 users");
    const auto k = static_cast<std::size_t>(spec.users);
    if (spec.tx_antennas.size() != k || spec.rx_antennas.size() != k || spec.streams.size() != k)
        throw std::invalid_argument("scenario: per-user lists must all have length K");
    for (int i = 0; i < spec.users; ++i) {
        const int m = spec.tx_antennas[i];
        const int n = spec.rx_antennas[i];
        const int d = spec.streams[i];
        if (m < 1 || n < 1)
            throw std::invalid_argument("scenario: antenna counts must be positive");
        if (d < 1 || d > std::min(m, n))
            throw std::invalid_argument("scenario: stream count must satisfy 1 <= d <= min(M, N)");
    }
}

/// Symmetric (M x N, d)^K constructor.
inline ScenarioSpec make_scenario(int users, int tx_antennas, int rx_antennas, int streams) {
    ScenarioSpec spec;
    spec.users = users;
    if (users >= 2) {
        const auto k = static_cast<std::size_t>(users);
        spec.tx_antennas.assign(k, tx_antennas);
        spec.rx_antennas.assign(k, rx_antennas);
        spec.streams.assign(k, streams);
    }
    validate_scenario(spec);
    return spec;
}

inline ScenarioSpec make_scenario(std::vector<int> tx_antennas, std::vector<int> rx_antennas,
                                  std::vector<int> streams) {
    ScenarioSpec spec;
    spec.users = static_cast<int>(tx_antennas.size());
    spec.tx_antennas = std::move(tx_antennas);
    spec.rx_antennas = std::move(rx_antennas);
    spec.streams = std::move(streams);
    validate_scenario(spec);
    return spec;
}

inline bool is_symmetric(const ScenarioSpec& spec) {
    auto constant = [](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(), [&](int x) { return x == v.front(); });
    };
    return constant(spec.tx_antennas) && constant(spec.rx_antennas) && constant(spec.streams);
}

struct VariableCount {
    std::int64_t complex_count = 0;  // sum_i (M_i + N_i) d_i
    std::int64_t real_count = 0;     // 2 * complex_count (re/im split)
};

/// Number of beamformer variables: each user contributes (M_i + N_i) d_i
/// complex entries; each complex entry splits into two real ones.
inline VariableCount count_variables(const ScenarioSpec& spec) {
    validate_scenario(spec);
    VariableCount out;
    for (int i = 0; i < spec.users; ++i) {
        out.complex_count += static_cast<std::int64_t>(spec.tx_antennas[i] + spec.rx_antennas[i]) *
                             spec.streams[i];
    }
    out.real_count = 2 * out.complex_count;
    return out;
}

/// Number of scalar alignment equations: one per entry of every cross-pair
/// product, i.e. sum over ordered pairs i != j of d_i * d_j.
inline std::int64_t count_equations(const ScenarioSpec& spec) {
    validate_scenario(spec);
    std::int64_t total = 0;
    for (int i = 0; i < spec.users; ++i)
        for (int j = 0; j < spec.users; ++j)
            if (i != j) total += static_cast<std::int64_t>(spec.streams[i]) * spec.streams[j];
    return total;
}

/// Necessary condition for the alignment system to admit solutions: at least
/// as many complex variables as scalar equations.
inline bool check_feasibility(const ScenarioSpec& spec) {
    return count_variables(spec).complex_count >= count_equations(spec);
}

/// "(5x5,2)^3" for symmetric scenarios; explicit per-user lists otherwise.
inline std::string scenario_label(const ScenarioSpec& spec) {
    if (is_symmetric(spec)) {
        return "(" + std::to_string(spec.tx_antennas[0]) + "x" + std::to_string(spec.rx_antennas[0]) +
               "," + std::to_string(spec.streams[0]) + ")^" + std::to_string(spec.users);
    }
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    return "K=" + std::to_string(spec.users) + "[M=" + join(spec.tx_antennas) +
           ";N=" + join(spec.rx_antennas) + ";d=" + join(spec.streams) + "]";
}

}  // namespace ia
