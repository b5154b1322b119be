#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "ia/rng.hpp"
#include "ia/scenario.hpp"

namespace ia {

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// All K^2 channel matrices of one network realization. Entry (rx, tx) is the
/// N_rx x M_tx matrix of the link from transmitter tx to receiver rx.
template <typename Scalar = double>
struct ChannelSet {
    ScenarioSpec spec;
    std::vector<ComplexMatrix<Scalar>> entries;  // row-major K x K grid

    const ComplexMatrix<Scalar>& operator()(int rx, int tx) const {
        return entries[static_cast<std::size_t>(rx) * spec.users + tx];
    }
    ComplexMatrix<Scalar>& operator()(int rx, int tx) {
        return entries[static_cast<std::size_t>(rx) * spec.users + tx];
    }
};

/// Draws every channel entry i.i.d. circularly-symmetric complex Gaussian with
/// unit variance (real and imaginary parts each N(0, 1/2)). Pure function of
/// (spec, seed): the same pair always yields bit-identical matrices.
template <typename Scalar = double>
ChannelSet<Scalar> generate_channels(const ScenarioSpec& spec, std::uint64_t seed) {
    validate_scenario(spec);
    Rng rng(seed);
    const Scalar inv_sqrt2 = Scalar(1) / std::sqrt(Scalar(2));
    ChannelSet<Scalar> out;
    out.spec = spec;
    out.entries.reserve(static_cast<std::size_t>(spec.users) * spec.users);
    for (int rx = 0; rx < spec.users; ++rx) {
        for (int tx = 0; tx < spec.users; ++tx) {
            ComplexMatrix<Scalar> h(spec.rx_antennas[rx], spec.tx_antennas[tx]);
            for (Eigen::Index c = 0; c < h.cols(); ++c) {
                for (Eigen::Index r = 0; r < h.rows(); ++r) {
                    const auto [re, im] = rng.normal_pair();
                    h(r, c) = std::complex<Scalar>(static_cast<Scalar>(re) * inv_sqrt2,
                                                   static_cast<Scalar>(im) * inv_sqrt2);
                }
            }
            out.entries.push_back(std::move(h));
        }
    }
    return out;
}

template <typename Scalar>
bool channels_equal(const ChannelSet<Scalar>& a, const ChannelSet<Scalar>& b) {
    if (!(a.spec == b.spec) || a.entries.size() != b.entries.size()) return false;
    for (std::size_t k = 0; k < a.entries.size(); ++k) {
        if (a.entries[k].rows() != b.entries[k].rows() ||
            a.entries[k].cols() != b.entries[k].cols())
            return false;
        if (a.entries[k] != b.entries[k]) return false;
    }
    return true;
}

}  // namespace ia
