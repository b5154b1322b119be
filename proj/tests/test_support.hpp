#pragma once

// Reference implementations kept deliberately naive (plain loops over
// std::complex, no Eigen) so library results are checked against independent
// arithmetic, plus generators for small random problem instances.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <vector>

#include "ia/beamformer_set.hpp"
#include "ia/channel_set.hpp"
#include "ia/rng.hpp"
#include "ia/scenario.hpp"

namespace test_support {

/// Entries of adjoint(U_i) * H_ij * V_j for all i != j, column-stacked per
/// block, blocks in lexicographic order with i outermost.
inline std::vector<std::complex<double>> naive_residuals(const ia::ChannelSet<double>& channels,
                                                         const ia::BeamformerSet<double>& bf) {
    const ia::ScenarioSpec& spec = channels.spec;
    std::vector<std::complex<double>> out;
    for (int i = 0; i < spec.users; ++i) {
        for (int j = 0; j < spec.users; ++j) {
            if (i == j) continue;
            for (int col = 0; col < spec.streams[j]; ++col) {
                for (int row = 0; row < spec.streams[i]; ++row) {
                    std::complex<double> sum = 0.0;
                    for (int a = 0; a < spec.rx_antennas[i]; ++a)
                        for (int b = 0; b < spec.tx_antennas[j]; ++b)
                            sum += std::conj(bf.decoders[i](a, row)) * channels(i, j)(a, b) *
                                   bf.precoders[j](b, col);
                    out.push_back(sum);
                }
            }
        }
    }
    return out;
}

inline double naive_leakage(const ia::ChannelSet<double>& channels,
                            const ia::BeamformerSet<double>& bf) {
    double total = 0.0;
    for (const std::complex<double>& r : naive_residuals(channels, bf)) total += std::norm(r);
    return total;
}

/// Small random scenario with heterogeneous per-user shapes.
inline ia::ScenarioSpec random_scenario(ia::Rng& rng, int max_users = 4, int max_antennas = 5) {
    const int users = 2 + rng.uniform_int(max_users - 1);
    std::vector<int> tx(users), rx(users), streams(users);
    for (int i = 0; i < users; ++i) {
        tx[i] = 1 + rng.uniform_int(max_antennas);
        rx[i] = 1 + rng.uniform_int(max_antennas);
        streams[i] = 1 + rng.uniform_int(std::min(tx[i], rx[i]));
    }
    return ia::make_scenario(tx, rx, streams);
}

struct Instance {
    ia::ChannelSet<double> channels;
    ia::BeamformerSet<double> beamformers;
};

inline Instance random_instance(std::uint64_t seed, int max_users = 4, int max_antennas = 5) {
    ia::Rng rng(ia::derive_seed(seed, 100));
    const ia::ScenarioSpec spec = random_scenario(rng, max_users, max_antennas);
    Instance inst{ia::generate_channels(spec, ia::derive_seed(seed, 101)),
                  ia::random_beamformers<double>(spec, rng)};
    return inst;
}

}  // namespace test_support
