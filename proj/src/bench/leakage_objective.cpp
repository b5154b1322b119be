#include "ia/bench/leakage_objective.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

#include "ia/leakage.hpp"
#include "ia/scenario.hpp"

namespace ia::bench {

LeakageObjective::LeakageObjective(ChannelSet<double> channels, ObjectiveMode mode)
    : Objective(Eigen::VectorXd::Constant(count_variables(channels.spec).real_count, -1.0),
                Eigen::VectorXd::Constant(count_variables(channels.spec).real_count, 1.0)),
      channels_(std::move(channels)),
      mode_(mode),
      workspace_(make_zero_beamformers<double>(channels_.spec)) {
    const ScenarioSpec& spec = channels_.spec;
    left_.resize(static_cast<std::size_t>(spec.users) * spec.users);
    block_.resize(left_.size());
    for (int i = 0; i < spec.users; ++i) {
        for (int j = 0; j < spec.users; ++j) {
            if (i == j) continue;
            const auto at = static_cast<std::size_t>(i) * spec.users + j;
            left_[at].resize(spec.streams[i], spec.tx_antennas[j]);
            block_[at].resize(spec.streams[i], spec.streams[j]);
        }
    }
}

double LeakageObjective::do_evaluate(const Eigen::Ref<const Eigen::VectorXd>& x) {
    decode_into(x, workspace_);
    if (mode_ == ObjectiveMode::kNormalized) {
        try {
            return leakage_normalized(channels_, workspace_);
        } catch (const std::domain_error&) {
            return std::numeric_limits<double>::infinity();
        }
    }
    const ScenarioSpec& spec = channels_.spec;
    double total = 0.0;
    for (int i = 0; i < spec.users; ++i) {
        for (int j = 0; j < spec.users; ++j) {
            if (i == j) continue;
            const auto at = static_cast<std::size_t>(i) * spec.users + j;
            left_[at].noalias() = workspace_.decoders[i].adjoint() * channels_(i, j);
            block_[at].noalias() = left_[at] * workspace_.precoders[j];
            total += block_[at].squaredNorm();
        }
    }
    return total;
}

}  // namespace ia::bench
