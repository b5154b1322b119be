#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include <Eigen/Core>

#include "ia/opt/objective.hpp"
#include "ia/opt/trace.hpp"
#include "ia/rng.hpp"

namespace ia::opt {

/// Scale of the noise term in the velocity rule: either a fixed value, or
/// redrawn as c * r3 with r3 ~ U[0,1] before every particle's velocity update.
struct OmegaMode {
    bool randomized = false;
    double value = 1.0;  // omega itself, or the scale c in randomized mode

    static OmegaMode fixed(double omega) { return {false, omega}; }
    static OmegaMode random_scaled(double c) { return {true, c}; }
};

struct PsoConfig {
    int swarm_size = 100;
    OmegaMode omega = OmegaMode::fixed(1.0);
    int max_iterations = 1000;
    std::uint64_t seed = 1;
    bool clamp = false;  // keep in-flight positions inside the box
    std::optional<double> target_cost;  // early exit once the best drops to/below this
};

void validate(const PsoConfig& cfg);

/// One swarm's full state. Particles are columns.
struct PsoSwarm {
    Eigen::MatrixXd position;
    Eigen::MatrixXd velocity;
    Eigen::MatrixXd personal_best;
    Eigen::VectorXd personal_best_cost;
    Eigen::VectorXd global_best;
    double global_best_cost = 0.0;

    int dimension() const { return static_cast<int>(position.rows()); }
    int size() const { return static_cast<int>(position.cols()); }
};

using EvalFn = std::function<double(const Eigen::Ref<const Eigen::VectorXd>&)>;

/// Velocity rule: per dimension d,
///   v_d' = omega * |partner_best_d - personal_best_d| * sign(v_d)
///          + r_d * (personal_best_d - position_d)
///          + (1 - r_d) * (global_best_d - position_d)
/// with sign(0) = +1 and r_d the caller-supplied U[0,1] draws.
Eigen::VectorXd pso_velocity_update(const Eigen::VectorXd& velocity, const Eigen::VectorXd& position,
                                    const Eigen::VectorXd& personal_best,
                                    const Eigen::VectorXd& partner_best,
                                    const Eigen::VectorXd& global_best, double omega,
                                    const Eigen::VectorXd& r);

/// Uniform positions in the box, velocities in one tenth of it, an evaluation
/// of every particle, and the initial personal/global bests.
void pso_swarm_init(PsoSwarm& swarm, int dimension, int count, const Eigen::VectorXd& lower,
                    const Eigen::VectorXd& upper, Rng& rng, const EvalFn& eval);

/// One synchronous iteration: move every particle (velocities computed against
/// the bests from the previous evaluation round), then re-evaluate and update
/// personal and global bests by strict improvement.
void pso_swarm_step(PsoSwarm& swarm, const OmegaMode& omega, bool clamp, const Eigen::VectorXd& lower,
                    const Eigen::VectorXd& upper, Rng& rng, const EvalFn& eval);

Trace pso_run(Objective& objective, const PsoConfig& cfg);

}  // namespace ia::opt
