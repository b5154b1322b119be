#pragma once

#include <cstdint>
#include <optional>

#include <Eigen/Core>

#include "ia/opt/objective.hpp"
#include "ia/opt/pso.hpp"  // EvalFn
#include "ia/opt/trace.hpp"
#include "ia/rng.hpp"

namespace ia::opt {

struct AbcConfig {
    int food_sources = 100;  // SN: employed bees == onlooker bees == sources
    int limit = 5;           // abandonment threshold on the trial counter
    int max_cycles = 1000;
    std::uint64_t seed = 1;
    bool clamp = false;  // keep candidate moves inside the box
    std::optional<double> target_cost;
};

void validate(const AbcConfig& cfg);

/// Maps a nonnegative cost to a fitness in (0, 1]: fit = 1 / (1 + cost).
/// Strictly decreasing, so roulette selection favors cheaper sources.
double fitness_transform(double cost);

/// Normalized roulette weights p_i = fit_i / sum_j fit_j for the given costs.
Eigen::VectorXd roulette_probabilities(const Eigen::VectorXd& costs);

/// Food sources are columns; trial counts how many cycles a source went
/// without a greedy improvement.
struct AbcColony {
    Eigen::MatrixXd position;
    Eigen::VectorXd cost;
    Eigen::VectorXi trial;
    Eigen::VectorXd best_point;  // best-so-far, kept even after abandonment
    double best_cost = 0.0;

    int dimension() const { return static_cast<int>(position.rows()); }
    int size() const { return static_cast<int>(position.cols()); }
};

void abc_colony_init(AbcColony& colony, int dimension, int count, const Eigen::VectorXd& lower,
                     const Eigen::VectorXd& upper, Rng& rng, const EvalFn& eval);

/// One cycle: employed phase (every source proposes a one-dimension move
/// toward/away from a random partner, greedy acceptance), onlooker phase
/// (SN roulette-selected sources get the same treatment), scout phase (the
/// single most-exhausted source with trial > limit is redrawn uniformly),
/// then the best-so-far memo is refreshed.
void abc_colony_step(AbcColony& colony, int limit, bool clamp, const Eigen::VectorXd& lower,
                     const Eigen::VectorXd& upper, Rng& rng, const EvalFn& eval);

Trace abc_run(Objective& objective, const AbcConfig& cfg);

}  // namespace ia::opt
