#include "ia/opt/cc.hpp"

#include <stdexcept>
#include <vector>

namespace ia::opt {

void validate(const CoopConfig& cfg) {
    if (cfg.per_swarm_population < 2)
        throw std::invalid_argument("cc: per_swarm_population must be at least 2");
    if (cfg.omega.value < 0.0) throw std::invalid_argument("cc: omega scale must be nonnegative");
    if (cfg.limit < 1) throw std::invalid_argument("cc: limit must be at least 1");
    if (cfg.max_cycles < 0) throw std::invalid_argument("cc: max_cycles must be nonnegative");
}

namespace {

// Full-dimension incumbent. probe() prices a candidate value for the active
// component by splicing it into a scratch copy and calling the objective.
struct ContextState {
    Eigen::VectorXd values;
    Eigen::VectorXd scratch;
    double cost = 0.0;
    int component = 0;
};

}  // namespace

Trace cc_run(Objective& objective, const CoopConfig& cfg, const CycleObserver& observe) {
    validate(cfg);
    const int n = objective.dimension();
    const int count = cfg.per_swarm_population;
    const Eigen::VectorXd& lower = objective.lower_bounds();
    const Eigen::VectorXd& upper = objective.upper_bounds();
    Rng rng(cfg.seed);
    const std::int64_t start_count = objective.evaluation_count();

    ContextState ctx;
    ctx.values.resize(n);
    ctx.scratch.resize(n);
    const EvalFn eval = [&](const Eigen::Ref<const Eigen::VectorXd>& z) {
        ctx.scratch = ctx.values;
        ctx.scratch[ctx.component] = z[0];
        return objective.evaluate(ctx.scratch);
    };

    const bool pso = cfg.inner == InnerKind::kPso;
    std::vector<PsoSwarm> swarms;
    std::vector<AbcColony> colonies;

    // Draw every population up front — member 0 of each seeds the context,
    // which must be complete before any candidate can be priced. Per swarm the
    // draw order matches the plain optimizer's init, so n = 1 stays on the
    // same random sequence as pso_run/abc_run.
    if (pso) {
        swarms.resize(n);
        for (int j = 0; j < n; ++j) {
            auto& s = swarms[j];
            s.position.resize(1, count);
            s.velocity.resize(1, count);
            for (int i = 0; i < count; ++i) s.position(0, i) = rng.uniform(lower[j], upper[j]);
            for (int i = 0; i < count; ++i)
                s.velocity(0, i) = rng.symmetric((upper[j] - lower[j]) / 10.0);
        }
        for (int j = 0; j < n; ++j) ctx.values[j] = swarms[j].position(0, 0);
        ctx.cost = objective.evaluate(ctx.values);
        for (int j = 0; j < n; ++j) {
            ctx.component = j;
            auto& s = swarms[j];
            s.personal_best = s.position;
            s.personal_best_cost.resize(count);
            for (int i = 0; i < count; ++i) s.personal_best_cost[i] = eval(s.position.col(i));
            Eigen::Index best = 0;
            s.personal_best_cost.minCoeff(&best);
            s.global_best = s.personal_best.col(best);
            s.global_best_cost = s.personal_best_cost[best];
            if (s.global_best_cost < ctx.cost) {
                ctx.values[j] = s.global_best[0];
                ctx.cost = s.global_best_cost;
            }
        }
    } else {
        colonies.resize(n);
        for (int j = 0; j < n; ++j) {
            auto& c = colonies[j];
            c.position.resize(1, count);
            for (int i = 0; i < count; ++i) c.position(0, i) = rng.uniform(lower[j], upper[j]);
        }
        for (int j = 0; j < n; ++j) ctx.values[j] = colonies[j].position(0, 0);
        ctx.cost = objective.evaluate(ctx.values);
        for (int j = 0; j < n; ++j) {
            ctx.component = j;
            auto& c = colonies[j];
            c.cost.resize(count);
            c.trial = Eigen::VectorXi::Zero(count);
            for (int i = 0; i < count; ++i) c.cost[i] = eval(c.position.col(i));
            Eigen::Index best = 0;
            c.cost.minCoeff(&best);
            c.best_point = c.position.col(best);
            c.best_cost = c.cost[best];
            if (c.best_cost < ctx.cost) {
                ctx.values[j] = c.best_point[0];
                ctx.cost = c.best_cost;
            }
        }
    }

    Trace trace;
    trace.best_cost.push_back(ctx.cost);
    trace.evaluations.push_back(objective.evaluation_count() - start_count);
    if (observe) observe(0, ctx.values, ctx.cost);

    Eigen::VectorXd lower1(1), upper1(1);
    for (int cycle = 1; cycle <= cfg.max_cycles; ++cycle) {
        if (cfg.target_cost && ctx.cost <= *cfg.target_cost) break;
        for (int j = 0; j < n; ++j) {
            ctx.component = j;
            lower1[0] = lower[j];
            upper1[0] = upper[j];
            if (pso) {
                auto& s = swarms[j];
                // The swarm's global best IS context component j; in the
                // current context it prices at exactly ctx.cost, so re-price
                // it before the turn (other swarms may have moved since).
                s.global_best_cost = ctx.cost;
                pso_swarm_step(s, cfg.omega, cfg.clamp, lower1, upper1, rng, eval);
                if (s.global_best_cost < ctx.cost) {
                    ctx.values[j] = s.global_best[0];
                    ctx.cost = s.global_best_cost;
                }
            } else {
                auto& c = colonies[j];
                c.best_cost = ctx.cost;
                abc_colony_step(c, cfg.limit, cfg.clamp, lower1, upper1, rng, eval);
                if (c.best_cost < ctx.cost) {
                    ctx.values[j] = c.best_point[0];
                    ctx.cost = c.best_cost;
                }
            }
        }
        trace.best_cost.push_back(ctx.cost);
        trace.evaluations.push_back(objective.evaluation_count() - start_count);
        if (observe) observe(cycle, ctx.values, ctx.cost);
    }
    trace.best_point = ctx.values;
    return trace;
}

}  // namespace ia::opt
