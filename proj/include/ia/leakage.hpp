#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SVD>

#include "ia/beamformer_set.hpp"
#include "ia/channel_set.hpp"
#include "ia/scenario.hpp"

namespace ia {

inline constexpr double kDefaultRankTolerance = 1e-8;

namespace detail {
template <typename Scalar>
void check_pair(const ChannelSet<Scalar>& channels, const BeamformerSet<Scalar>& bf) {
    validate_scenario(channels.spec);
    validate_beamformers(channels.spec, bf);
}
}  // namespace detail

/// Stacked cross-link residuals. Block (i, j), i != j, holds the column-
/// stacked entries of adjoint(U_i) * H_ij * V_j; blocks are ordered
/// lexicographically with the receiver index i outermost.
template <typename Scalar>
ComplexVector<Scalar> residuals(const ChannelSet<Scalar>& channels, const BeamformerSet<Scalar>& bf) {
    detail::check_pair(channels, bf);
    const ScenarioSpec& spec = channels.spec;
    ComplexVector<Scalar> r(count_equations(spec));
    Eigen::Index at = 0;
    ComplexMatrix<Scalar> block;
    for (int i = 0; i < spec.users; ++i) {
        for (int j = 0; j < spec.users; ++j) {
            if (i == j) continue;
            block.noalias() = bf.decoders[i].adjoint() * channels(i, j) * bf.precoders[j];
            for (Eigen::Index c = 0; c < block.cols(); ++c)
                for (Eigen::Index rr = 0; rr < block.rows(); ++rr) r[at++] = block(rr, c);
        }
    }
    return r;
}

/// Total interference power left after decoding: the squared norm of the
/// residual vector. Zero exactly when all cross links are aligned away.
template <typename Scalar>
Scalar leakage(const ChannelSet<Scalar>& channels, const BeamformerSet<Scalar>& bf) {
    detail::check_pair(channels, bf);
    const ScenarioSpec& spec = channels.spec;
    Scalar total = 0;
    for (int i = 0; i < spec.users; ++i)
        for (int j = 0; j < spec.users; ++j)
            if (i != j)
                total += (bf.decoders[i].adjoint() * channels(i, j) * bf.precoders[j]).squaredNorm();
    return total;
}

/// Leakage of the column-normalized beamformers. Invariant under any positive
/// rescaling of the input, so it cannot be driven to zero by shrinking the
/// beamformer norms; throws on near-zero columns.
template <typename Scalar>
Scalar leakage_normalized(const ChannelSet<Scalar>& channels, const BeamformerSet<Scalar>& bf) {
    return leakage(channels, normalize_columns(bf));
}

template <typename Scalar = double>
struct RankDiagnostics {
    std::vector<int> per_user_rank;                  // rank of adjoint(U_i) H_ii V_i
    std::vector<Scalar> per_user_smallest_singular;
    bool satisfied = false;                          // all ranks equal d_i
};

/// Numerical rank of every direct-link product adjoint(U_i) * H_ii * V_i:
/// singular values above tol * (largest singular value) count toward the rank.
/// The desired streams stay decodable only when every rank equals d_i.
template <typename Scalar>
RankDiagnostics<Scalar> rank_check(const ChannelSet<Scalar>& channels, const BeamformerSet<Scalar>& bf,
                                   Scalar tol = Scalar(kDefaultRankTolerance)) {
    detail::check_pair(channels, bf);
    if (!(tol > Scalar(0))) throw std::invalid_argument("rank_check: tolerance must be positive");
    const ScenarioSpec& spec = channels.spec;
    RankDiagnostics<Scalar> diag;
    diag.satisfied = true;
    for (int i = 0; i < spec.users; ++i) {
        const ComplexMatrix<Scalar> direct = bf.decoders[i].adjoint() * channels(i, i) * bf.precoders[i];
        Eigen::JacobiSVD<ComplexMatrix<Scalar>> svd(direct);
        const auto& sigma = svd.singularValues();
        const Scalar threshold = tol * sigma(0);
        int rank = 0;
        for (Eigen::Index s = 0; s < sigma.size(); ++s)
            if (sigma(s) > threshold) ++rank;
        diag.per_user_rank.push_back(rank);
        diag.per_user_smallest_singular.push_back(sigma(sigma.size() - 1));
        if (rank != spec.streams[i]) diag.satisfied = false;
    }
    return diag;
}

}  // namespace ia
