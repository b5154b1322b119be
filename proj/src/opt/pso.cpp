#include "ia/opt/pso.hpp"

#include <stdexcept>

namespace ia::opt {

namespace {
inline double sign_or_plus(double v) { return v < 0.0 ? -1.0 : 1.0; }
}  // namespace

void validate(const PsoConfig& cfg) {
    if (cfg.swarm_size < 2) throw std::invalid_argument("pso: swarm_size must be at least 2");
    if (cfg.omega.value < 0.0) throw std::invalid_argument("pso: omega scale must be nonnegative");
    if (cfg.max_iterations < 0) throw std::invalid_argument("pso: max_iterations must be nonnegative");
}

Eigen::VectorXd pso_velocity_update(const Eigen::VectorXd& velocity, const Eigen::VectorXd& position,
                                    const Eigen::VectorXd& personal_best,
                                    const Eigen::VectorXd& partner_best,
                                    const Eigen::VectorXd& global_best, double omega,
                                    const Eigen::VectorXd& r) {
    const Eigen::Index n = velocity.size();
    if (position.size() != n || personal_best.size() != n || partner_best.size() != n ||
        global_best.size() != n || r.size() != n)
        throw std::invalid_argument("pso_velocity_update: dimension mismatch");
    Eigen::VectorXd out(n);
    for (Eigen::Index d = 0; d < n; ++d) {
        const double noise =
            omega * std::abs(partner_best[d] - personal_best[d]) * sign_or_plus(velocity[d]);
        out[d] = noise + r[d] * (personal_best[d] - position[d]) +
                 (1.0 - r[d]) * (global_best[d] - position[d]);
    }
    return out;
}

void pso_swarm_init(PsoSwarm& swarm, int dimension, int count, const Eigen::VectorXd& lower,
                    const Eigen::VectorXd& upper, Rng& rng, const EvalFn& eval) {
    swarm.position.resize(dimension, count);
    swarm.velocity.resize(dimension, count);
    swarm.personal_best.resize(dimension, count);
    swarm.personal_best_cost.resize(count);
    for (int i = 0; i < count; ++i)
        for (int d = 0; d < dimension; ++d) swarm.position(d, i) = rng.uniform(lower[d], upper[d]);
    for (int i = 0; i < count; ++i)
        for (int d = 0; d < dimension; ++d)
            swarm.velocity(d, i) = rng.symmetric((upper[d] - lower[d]) / 10.0);
    swarm.personal_best = swarm.position;
    for (int i = 0; i < count; ++i) swarm.personal_best_cost[i] = eval(swarm.position.col(i));
    Eigen::Index best = 0;
    swarm.personal_best_cost.minCoeff(&best);
    swarm.global_best = swarm.personal_best.col(best);
    swarm.global_best_cost = swarm.personal_best_cost[best];
}

void pso_swarm_step(PsoSwarm& swarm, const OmegaMode& omega, bool clamp, const Eigen::VectorXd& lower,
                    const Eigen::VectorXd& upper, Rng& rng, const EvalFn& eval) {
    const int count = swarm.size();
    const int dim = swarm.dimension();
    Eigen::VectorXd r(dim);
    for (int i = 0; i < count; ++i) {
        const int partner = rng.uniform_int(count);
        const double w = omega.randomized ? omega.value * rng.uniform01() : omega.value;
        for (int d = 0; d < dim; ++d) r[d] = rng.uniform01();
        swarm.velocity.col(i) =
            pso_velocity_update(swarm.velocity.col(i), swarm.position.col(i),
                                swarm.personal_best.col(i), swarm.personal_best.col(partner),
                                swarm.global_best, w, r);
        swarm.position.col(i) += swarm.velocity.col(i);
        if (clamp)
            swarm.position.col(i) =
                swarm.position.col(i).cwiseMax(lower).cwiseMin(upper);
    }
    for (int i = 0; i < count; ++i) {
        const double cost = eval(swarm.position.col(i));
        if (cost < swarm.personal_best_cost[i]) {
            swarm.personal_best.col(i) = swarm.position.col(i);
            swarm.personal_best_cost[i] = cost;
        }
    }
    for (int i = 0; i < count; ++i) {
        if (swarm.personal_best_cost[i] < swarm.global_best_cost) {
            swarm.global_best_cost = swarm.personal_best_cost[i];
            swarm.global_best = swarm.personal_best.col(i);
        }
    }
}

Trace pso_run(Objective& objective, const PsoConfig& cfg) {
    validate(cfg);
    Rng rng(cfg.seed);
    const std::int64_t start_count = objective.evaluation_count();
    const EvalFn eval = [&](const Eigen::Ref<const Eigen::VectorXd>& x) {
        return objective.evaluate(x);
    };

    PsoSwarm swarm;
    pso_swarm_init(swarm, objective.dimension(), cfg.swarm_size, objective.lower_bounds(),
                   objective.upper_bounds(), rng, eval);

    Trace trace;
    trace.best_cost.push_back(swarm.global_best_cost);
    trace.evaluations.push_back(objective.evaluation_count() - start_count);
    for (int t = 0; t < cfg.max_iterations; ++t) {
        if (cfg.target_cost && swarm.global_best_cost <= *cfg.target_cost) break;
        pso_swarm_step(swarm, cfg.omega, cfg.clamp, objective.lower_bounds(),
                       objective.upper_bounds(), rng, eval);
        trace.best_cost.push_back(swarm.global_best_cost);
        trace.evaluations.push_back(objective.evaluation_count() - start_count);
    }
    trace.best_point = swarm.global_best;
    return trace;
}

}  // namespace ia::opt
