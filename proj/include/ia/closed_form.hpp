#pragma once

#include <stdexcept>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "ia/beamformer_set.hpp"
#include "ia/channel_set.hpp"

namespace ia {

namespace detail {
template <typename Scalar>
ComplexMatrix<Scalar> solve_or_throw(const ComplexMatrix<Scalar>& a, const ComplexMatrix<Scalar>& b) {
    Eigen::FullPivLU<ComplexMatrix<Scalar>> lu(a);
    if (!lu.isInvertible())
        throw std::runtime_error("closed_form_3user: channel matrix is numerically singular");
    return lu.solve(b);
}
}  // namespace detail

/// Exact alignment for the (2x2,1)^3 network.
///
/// V_1 is an eigenvector of E = inv(H_31) H_32 inv(H_12) H_13 inv(H_23) H_21;
/// V_2 = inv(H_32) H_31 V_1 and V_3 = inv(H_23) H_21 V_1 then force the two
/// interference vectors at every receiver onto a common line, and each U_i is
/// the unit vector orthogonal to that line (the least-significant left
/// singular vector of the stacked interference at receiver i).
template <typename Scalar = double>
BeamformerSet<Scalar> closed_form_3user(const ChannelSet<Scalar>& channels) {
    validate_scenario(channels.spec);
    const ScenarioSpec expected = make_scenario(3, 2, 2, 1);
    if (!(channels.spec == expected))
        throw std::invalid_argument("closed_form_3user: requires the (2x2,1)^3 scenario");

    using CMat = ComplexMatrix<Scalar>;
    const CMat& h12 = channels(0, 1);
    const CMat& h13 = channels(0, 2);
    const CMat& h21 = channels(1, 0);
    const CMat& h23 = channels(1, 2);
    const CMat& h31 = channels(2, 0);
    const CMat& h32 = channels(2, 1);

    const CMat chain = detail::solve_or_throw(
        h31, CMat(h32 * detail::solve_or_throw(h12, CMat(h13 * detail::solve_or_throw(h23, h21)))));

    Eigen::ComplexEigenSolver<CMat> eigen(chain);
    if (eigen.info() != Eigen::Success)
        throw std::runtime_error("closed_form_3user: eigendecomposition failed");

    BeamformerSet<Scalar> bf = make_zero_beamformers<Scalar>(channels.spec);
    bf.precoders[0] = eigen.eigenvectors().col(0);
    bf.precoders[1] = detail::solve_or_throw(h32, CMat(h31 * bf.precoders[0]));
    bf.precoders[2] = detail::solve_or_throw(h23, CMat(h21 * bf.precoders[0]));

    for (int i = 0; i < 3; ++i) {
        CMat interference(channels.spec.rx_antennas[i], 2);
        int col = 0;
        for (int j = 0; j < 3; ++j) {
            if (j == i) continue;
            interference.col(col++) = channels(i, j) * bf.precoders[j];
        }
        // null direction of the (rank-one) interference span
        Eigen::JacobiSVD<CMat> svd(interference, Eigen::ComputeFullU);
        bf.decoders[i] = svd.matrixU().col(svd.matrixU().cols() - 1);
    }
    return normalize_columns(bf);
}

}  // namespace ia
