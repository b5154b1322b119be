#pragma once

#include <algorithm>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "ia/channel_set.hpp"
#include "ia/rng.hpp"
#include "ia/scenario.hpp"

namespace ia {

/// Smallest column norm still treated as non-degenerate by the normalizing
/// operations.
inline constexpr double kDegenerateColumnNorm = 1e-12;

/// The optimization unknowns: per-user precoders V_i (M_i x d_i) and decoders
/// U_i (N_i x d_i).
template <typename Scalar = double>
struct BeamformerSet {
    ScenarioSpec spec;
    std::vector<ComplexMatrix<Scalar>> precoders;  // V_i
    std::vector<ComplexMatrix<Scalar>> decoders;   // U_i
};

template <typename Scalar>
void validate_beamformers(const ScenarioSpec& spec, const BeamformerSet<Scalar>& bf) {
    if (!(bf.spec == spec)) throw std::invalid_argument("beamformers: bound to a different scenario");
    const auto k = static_cast<std::size_t>(spec.users);
    if (bf.precoders.size() != k || bf.decoders.size() != k)
        throw std::invalid_argument("beamformers: need one precoder and one decoder per user");
    for (int i = 0; i < spec.users; ++i) {
        if (bf.precoders[i].rows() != spec.tx_antennas[i] || bf.precoders[i].cols() != spec.streams[i])
            throw std::invalid_argument("beamformers: precoder shape mismatch");
        if (bf.decoders[i].rows() != spec.rx_antennas[i] || bf.decoders[i].cols() != spec.streams[i])
            throw std::invalid_argument("beamformers: decoder shape mismatch");
    }
}

template <typename Scalar = double>
BeamformerSet<Scalar> make_zero_beamformers(const ScenarioSpec& spec) {
    validate_scenario(spec);
    BeamformerSet<Scalar> bf;
    bf.spec = spec;
    for (int i = 0; i < spec.users; ++i) {
        bf.precoders.push_back(ComplexMatrix<Scalar>::Zero(spec.tx_antennas[i], spec.streams[i]));
        bf.decoders.push_back(ComplexMatrix<Scalar>::Zero(spec.rx_antennas[i], spec.streams[i]));
    }
    return bf;
}

/// Random beamformers with i.i.d. CN(0,1) entries (not normalized).
template <typename Scalar = double>
BeamformerSet<Scalar> random_beamformers(const ScenarioSpec& spec, Rng& rng) {
    BeamformerSet<Scalar> bf = make_zero_beamformers<Scalar>(spec);
    const Scalar inv_sqrt2 = Scalar(1) / std::sqrt(Scalar(2));
    auto fill = [&](ComplexMatrix<Scalar>& m) {
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            for (Eigen::Index r = 0; r < m.rows(); ++r) {
                const auto [re, im] = rng.normal_pair();
                m(r, c) = std::complex<Scalar>(static_cast<Scalar>(re) * inv_sqrt2,
                                               static_cast<Scalar>(im) * inv_sqrt2);
            }
    };
    for (auto& v : bf.precoders) fill(v);
    for (auto& u : bf.decoders) fill(u);
    return bf;
}

/// Rescales every precoder and decoder column to unit Euclidean norm.
/// Directions are preserved; a column with norm below kDegenerateColumnNorm
/// is rejected as degenerate.
template <typename Scalar>
BeamformerSet<Scalar> normalize_columns(const BeamformerSet<Scalar>& bf) {
    BeamformerSet<Scalar> out = bf;
    auto scale = [](ComplexMatrix<Scalar>& m) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const Scalar norm = m.col(c).norm();
            if (norm < Scalar(kDegenerateColumnNorm))
                throw std::domain_error("normalize_columns: degenerate (near-zero) column");
            m.col(c) /= norm;
        }
    };
    for (auto& v : out.precoders) scale(v);
    for (auto& u : out.decoders) scale(u);
    return out;
}

template <typename Scalar>
Scalar min_column_norm(const BeamformerSet<Scalar>& bf) {
    Scalar smallest = std::numeric_limits<Scalar>::infinity();
    auto visit = [&](const ComplexMatrix<Scalar>& m) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) smallest = std::min(smallest, m.col(c).norm());
    };
    for (const auto& v : bf.precoders) visit(v);
    for (const auto& u : bf.decoders) visit(u);
    return smallest;
}

// ---------------------------------------------------------------------------
// Flat real decision-vector codec.
//
// Layout: column-stacked V_1..V_K followed by column-stacked adjoint(U_1)..
// adjoint(U_K); every complex scalar contributes (real, imaginary) as two
// adjacent entries. Because the adjoint is what gets vectorized, the stored
// imaginary parts of decoder variables are the negated ones; decode
// re-conjugates so BeamformerSet always holds U_i itself.
// ---------------------------------------------------------------------------

template <typename Scalar>
RealVector<Scalar> encode(const BeamformerSet<Scalar>& bf) {
    validate_beamformers(bf.spec, bf);
    RealVector<Scalar> x(count_variables(bf.spec).real_count);
    Eigen::Index at = 0;
    for (const auto& v : bf.precoders) {
        for (Eigen::Index c = 0; c < v.cols(); ++c)
            for (Eigen::Index r = 0; r < v.rows(); ++r) {
                x[at++] = v(r, c).real();
                x[at++] = v(r, c).imag();
            }
    }
    for (const auto& u : bf.decoders) {
        // columns of adjoint(U) are indexed by the receive antenna
        for (Eigen::Index n = 0; n < u.rows(); ++n)
            for (Eigen::Index m = 0; m < u.cols(); ++m) {
                x[at++] = u(n, m).real();
                x[at++] = -u(n, m).imag();
            }
    }
    return x;
}

/// Exact inverse of encode, writing into a preallocated set (hot path).
template <typename Scalar, typename Derived>
void decode_into(const Eigen::MatrixBase<Derived>& x, BeamformerSet<Scalar>& out) {
    validate_beamformers(out.spec, out);
    if (x.size() != count_variables(out.spec).real_count)
        throw std::invalid_argument("decode: vector length does not match the scenario");
    Eigen::Index at = 0;
    for (auto& v : out.precoders) {
        for (Eigen::Index c = 0; c < v.cols(); ++c)
            for (Eigen::Index r = 0; r < v.rows(); ++r) {
                v(r, c) = std::complex<Scalar>(x[at], x[at + 1]);
                at += 2;
            }
    }
    for (auto& u : out.decoders) {
        for (Eigen::Index n = 0; n < u.rows(); ++n)
            for (Eigen::Index m = 0; m < u.cols(); ++m) {
                u(n, m) = std::complex<Scalar>(x[at], -x[at + 1]);
                at += 2;
            }
    }
}

template <typename Scalar = double>
BeamformerSet<Scalar> decode(const RealVector<Scalar>& x, const ScenarioSpec& spec) {
    BeamformerSet<Scalar> out = make_zero_beamformers<Scalar>(spec);
    decode_into(x, out);
    return out;
}

}  // namespace ia
