#include "ia/opt/abc.hpp"

#include <algorithm>
#include <stdexcept>

namespace ia::opt {

void validate(const AbcConfig& cfg) {
    if (cfg.food_sources < 2) throw std::invalid_argument("abc: need at least 2 food sources");
    if (cfg.limit < 1) throw std::invalid_argument("abc: limit must be at least 1");
    if (cfg.max_cycles < 0) throw std::invalid_argument("abc: max_cycles must be nonnegative");
}

double fitness_transform(double cost) {
    if (cost < 0.0) throw std::domain_error("fitness_transform: cost must be nonnegative");
    return 1.0 / (1.0 + cost);
}

Eigen::VectorXd roulette_probabilities(const Eigen::VectorXd& costs) {
    Eigen::VectorXd fit(costs.size());
    for (Eigen::Index i = 0; i < costs.size(); ++i) fit[i] = fitness_transform(costs[i]);
    const double total = fit.sum();
    if (total <= 0.0)  // every source at infinite cost
        return Eigen::VectorXd::Constant(costs.size(), 1.0 / static_cast<double>(costs.size()));
    return fit / total;
}

namespace {

// v_j = x_ij + phi * (x_ij - x_kj) on one random dimension, greedy selection
// against the incumbent source.
void neighborhood_move(AbcColony& colony, int source, bool clamp, const Eigen::VectorXd& lower,
                       const Eigen::VectorXd& upper, Rng& rng, const EvalFn& eval,
                       Eigen::VectorXd& scratch) {
    const int dim = colony.dimension();
    const int count = colony.size();
    const int j = rng.uniform_int(dim);
    int k = rng.uniform_int(count - 1);
    if (k >= source) ++k;  // partner distinct from the source itself
    const double phi = rng.uniform(-1.0, 1.0);

    double candidate = colony.position(j, source) +
                       phi * (colony.position(j, source) - colony.position(j, k));
    if (clamp) candidate = std::clamp(candidate, lower[j], upper[j]);

    scratch = colony.position.col(source);
    scratch[j] = candidate;
    const double cost = eval(scratch);
    if (cost < colony.cost[source]) {
        colony.position(j, source) = candidate;
        colony.cost[source] = cost;
        colony.trial[source] = 0;
    } else {
        ++colony.trial[source];
    }
}

int roulette_pick(const Eigen::VectorXd& probabilities, double u) {
    double cumulative = 0.0;
    for (Eigen::Index i = 0; i < probabilities.size(); ++i) {
        cumulative += probabilities[i];
        if (u < cumulative) return static_cast<int>(i);
    }
    return static_cast<int>(probabilities.size() - 1);  // guard against rounding at u ~ 1
}

}  // namespace

void abc_colony_init(AbcColony& colony, int dimension, int count, const Eigen::VectorXd& lower,
                     const Eigen::VectorXd& upper, Rng& rng, const EvalFn& eval) {
    colony.position.resize(dimension, count);
    colony.cost.resize(count);
    colony.trial = Eigen::VectorXi::Zero(count);
    for (int i = 0; i < count; ++i)
        for (int d = 0; d < dimension; ++d) colony.position(d, i) = rng.uniform(lower[d], upper[d]);
    for (int i = 0; i < count; ++i) colony.cost[i] = eval(colony.position.col(i));
    Eigen::Index best = 0;
    colony.cost.minCoeff(&best);
    colony.best_point = colony.position.col(best);
    colony.best_cost = colony.cost[best];
}

void abc_colony_step(AbcColony& colony, int limit, bool clamp, const Eigen::VectorXd& lower,
                     const Eigen::VectorXd& upper, Rng& rng, const EvalFn& eval) {
    const int count = colony.size();
    Eigen::VectorXd scratch(colony.dimension());

    for (int i = 0; i < count; ++i)
        neighborhood_move(colony, i, clamp, lower, upper, rng, eval, scratch);

    const Eigen::VectorXd probabilities = roulette_probabilities(colony.cost);
    for (int draw = 0; draw < count; ++draw) {
        const int chosen = roulette_pick(probabilities, rng.uniform01());
        neighborhood_move(colony, chosen, clamp, lower, upper, rng, eval, scratch);
    }

    // at most one scout per cycle: the most-exhausted source past the limit
    int scout = -1;
    for (int i = 0; i < count; ++i)
        if (colony.trial[i] > limit && (scout < 0 || colony.trial[i] > colony.trial[scout]))
            scout = i;
    if (scout >= 0) {
        for (int d = 0; d < colony.dimension(); ++d)
            colony.position(d, scout) = rng.uniform(lower[d], upper[d]);
        colony.cost[scout] = eval(colony.position.col(scout));
        colony.trial[scout] = 0;
    }

    for (int i = 0; i < count; ++i) {
        if (colony.cost[i] < colony.best_cost) {
            colony.best_cost = colony.cost[i];
            colony.best_point = colony.position.col(i);
        }
    }
}

Trace abc_run(Objective& objective, const AbcConfig& cfg) {
    validate(cfg);
    Rng rng(cfg.seed);
    const std::int64_t start_count = objective.evaluation_count();
    const EvalFn eval = [&](const Eigen::Ref<const Eigen::VectorXd>& x) {
        return objective.evaluate(x);
    };

    AbcColony colony;
    abc_colony_init(colony, objective.dimension(), cfg.food_sources, objective.lower_bounds(),
                    objective.upper_bounds(), rng, eval);

    Trace trace;
    trace.best_cost.push_back(colony.best_cost);
    trace.evaluations.push_back(objective.evaluation_count() - start_count);
    for (int cycle = 0; cycle < cfg.max_cycles; ++cycle) {
        if (cfg.target_cost && colony.best_cost <= *cfg.target_cost) break;
        abc_colony_step(colony, cfg.limit, cfg.clamp, objective.lower_bounds(),
                        objective.upper_bounds(), rng, eval);
        trace.best_cost.push_back(colony.best_cost);
        trace.evaluations.push_back(objective.evaluation_count() - start_count);
    }
    trace.best_point = colony.best_point;
    return trace;
}

}  // namespace ia::opt
