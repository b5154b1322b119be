#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ia/channel_set.hpp"
#include "ia/scenario.hpp"

namespace ia {

/// 17 significant digits: enough for a double to survive a text round trip
/// bit-exactly.
inline std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

/// Plain-text scenario config: `key = value` lines with keys K, M, N, d, seed.
/// Symmetric scenarios only (the per-user lists collapse to one value each).
inline void save_scenario(const ScenarioSpec& spec, std::uint64_t seed,
                          const std::filesystem::path& path) {
    validate_scenario(spec);
    if (!is_symmetric(spec))
        throw std::invalid_argument("save_scenario: only symmetric scenarios are serialized");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_scenario: cannot open " + path.string());
    out << "K = " << spec.users << "\n"
        << "M = " << spec.tx_antennas[0] << "\n"
        << "N = " << spec.rx_antennas[0] << "\n"
        << "d = " << spec.streams[0] << "\n"
        << "seed = " << seed << "\n";
    if (!out) throw std::runtime_error("save_scenario: write failed for " + path.string());
}

inline std::pair<ScenarioSpec, std::uint64_t> load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_scenario: cannot open " + path.string());
    int users = 0, tx = 0, rx = 0, streams = 0;
    std::uint64_t seed = 0;
    bool have[5] = {};
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        try {
            if (key == "K") { users = std::stoi(value); have[0] = true; }
            else if (key == "M") { tx = std::stoi(value); have[1] = true; }
            else if (key == "N") { rx = std::stoi(value); have[2] = true; }
            else if (key == "d") { streams = std::stoi(value); have[3] = true; }
            else if (key == "seed") { seed = std::stoull(value); have[4] = true; }
            else throw std::invalid_argument("load_scenario: unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("load_scenario: bad value for key '" + key + "'");
        }
    }
    for (int k = 0; k < 4; ++k)
        if (!have[k]) throw std::invalid_argument("load_scenario: missing one of K, M, N, d");
    return {make_scenario(users, tx, rx, streams), have[4] ? seed : 0};
}

/// Channel dump: header line `K M N d`, then one line per matrix entry with
/// its (re, im) pair, row-major within each matrix, matrices in lexicographic
/// (rx, tx) order. Text with 17 significant digits, so load(save(H)) == H
/// bit-exactly. Symmetric scenarios only.
inline void save_channels(const ChannelSet<double>& channels, const std::filesystem::path& path) {
    validate_scenario(channels.spec);
    if (!is_symmetric(channels.spec))
        throw std::invalid_argument("save_channels: only symmetric scenarios are serialized");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_channels: cannot open " + path.string());
    const ScenarioSpec& spec = channels.spec;
    out << spec.users << " " << spec.tx_antennas[0] << " " << spec.rx_antennas[0] << " "
        << spec.streams[0] << "\n";
    for (int rx = 0; rx < spec.users; ++rx)
        for (int tx = 0; tx < spec.users; ++tx) {
            const auto& h = channels(rx, tx);
            for (Eigen::Index r = 0; r < h.rows(); ++r)
                for (Eigen::Index c = 0; c < h.cols(); ++c)
                    out << format_double(h(r, c).real()) << " " << format_double(h(r, c).imag())
                        << "\n";
        }
    if (!out) throw std::runtime_error("save_channels: write failed for " + path.string());
}

inline ChannelSet<double> load_channels(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_channels: cannot open " + path.string());
    int users = 0, tx = 0, rx = 0, streams = 0;
    if (!(in >> users >> tx >> rx >> streams))
        throw std::invalid_argument("load_channels: malformed header (expected `K M N d`)");
    const ScenarioSpec spec = make_scenario(users, tx, rx, streams);
    ChannelSet<double> channels;
    channels.spec = spec;
    for (int i = 0; i < spec.users; ++i)
        for (int j = 0; j < spec.users; ++j) {
            ComplexMatrix<double> h(spec.rx_antennas[i], spec.tx_antennas[j]);
            for (Eigen::Index r = 0; r < h.rows(); ++r)
                for (Eigen::Index c = 0; c < h.cols(); ++c) {
                    double re = 0, im = 0;
                    if (!(in >> re >> im))
                        throw std::invalid_argument("load_channels: truncated matrix data");
                    h(r, c) = {re, im};
                }
            channels.entries.push_back(std::move(h));
        }
    return channels;
}

}  // namespace ia
