#pragma once

#include <vector>

#include <Eigen/Core>

#include "ia/beamformer_set.hpp"
#include "ia/channel_set.hpp"
#include "ia/opt/objective.hpp"

namespace ia::bench {

enum class ObjectiveMode {
    kRaw,         // leakage of the decoded beamformers as-is (the headline metric)
    kNormalized,  // leakage after column normalization; +inf on degenerate columns
};

/// Interference leakage as a box-constrained real objective over the flat
/// decision vector: decode, then sum |adjoint(U_i) H_ij V_j|^2 over all cross
/// links. The search box is [-1, 1] per real dimension.
class LeakageObjective final : public opt::Objective {
public:
    explicit LeakageObjective(ChannelSet<double> channels, ObjectiveMode mode = ObjectiveMode::kRaw);

    const ChannelSet<double>& channels() const { return channels_; }
    ObjectiveMode mode() const { return mode_; }

private:
    double do_evaluate(const Eigen::Ref<const Eigen::VectorXd>& x) override;

    ChannelSet<double> channels_;
    ObjectiveMode mode_;
    // preallocated per-evaluation scratch: the decoded set plus one
    // left-product and one residual block per cross link
    BeamformerSet<double> workspace_;
    std::vector<ComplexMatrix<double>> left_;   // adjoint(U_i) * H_ij
    std::vector<ComplexMatrix<double>> block_;  // left * V_j
};

}  // namespace ia::bench
