#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ia/opt/abc.hpp"
#include "ia/opt/cc.hpp"
#include "ia/opt/pso.hpp"

using namespace ia;
using opt::AbcConfig;
using opt::CoopConfig;
using opt::FunctionObjective;
using opt::InnerKind;
using opt::OmegaMode;
using opt::PsoConfig;
using opt::Trace;

namespace {

FunctionObjective sphere(int dimension) {
    return FunctionObjective(dimension, -1.0, 1.0,
                             [](const Eigen::Ref<const Eigen::VectorXd>& x) {
                                 return x.squaredNorm();
                             });
}

double shifted_sphere_fn(const Eigen::Ref<const Eigen::VectorXd>& x) {
    return (x.array() - 0.3).matrix().squaredNorm();
}

bool non_increasing(const std::vector<double>& v) {
    for (std::size_t k = 1; k < v.size(); ++k)
        if (v[k] > v[k - 1]) return false;
    return true;
}

}  // namespace

TEST_CASE("config validation") {
    CoopConfig bad;
    bad.per_swarm_population = 1;
    CHECK_THROWS_AS(opt::validate(bad), std::invalid_argument);
    bad = CoopConfig{};
    bad.omega = OmegaMode::fixed(-1.0);
    CHECK_THROWS_AS(opt::validate(bad), std::invalid_argument);
    bad = CoopConfig{};
    bad.limit = 0;
    CHECK_THROWS_AS(opt::validate(bad), std::invalid_argument);
    bad = CoopConfig{};
    bad.max_cycles = -1;
    CHECK_THROWS_AS(opt::validate(bad), std::invalid_argument);
}

TEST_CASE("one subcomponent reproduces the plain PSO cost trace") {
    // with a single 1-D swarm the decomposition is trivial, so cycle k of the
    // cooperative loop must land exactly where iteration k of the flat
    // optimizer does: same draws, same bests, same costs
    FunctionObjective flat(1, -1.0, 1.0, shifted_sphere_fn);
    PsoConfig pso;
    pso.swarm_size = 20;
    pso.omega = OmegaMode::fixed(1.0);
    pso.max_iterations = 30;
    pso.seed = 91;
    const Trace plain = opt::pso_run(flat, pso);

    FunctionObjective wrapped(1, -1.0, 1.0, shifted_sphere_fn);
    CoopConfig cc;
    cc.inner = InnerKind::kPso;
    cc.per_swarm_population = 20;
    cc.omega = OmegaMode::fixed(1.0);
    cc.max_cycles = 30;
    cc.seed = 91;
    const Trace coop = opt::cc_run(wrapped, cc);

    REQUIRE(coop.best_cost.size() == plain.best_cost.size());
    CHECK(coop.best_cost == plain.best_cost);
    CHECK(coop.best_point == plain.best_point);
}

TEST_CASE("one subcomponent reproduces the plain ABC cost trace") {
    FunctionObjective flat(1, -1.0, 1.0, shifted_sphere_fn);
    AbcConfig abc;
    abc.food_sources = 20;
    abc.limit = 5;
    abc.max_cycles = 30;
    abc.seed = 92;
    const Trace plain = opt::abc_run(flat, abc);

    FunctionObjective wrapped(1, -1.0, 1.0, shifted_sphere_fn);
    CoopConfig cc;
    cc.inner = InnerKind::kAbc;
    cc.per_swarm_population = 20;
    cc.limit = 5;
    cc.max_cycles = 30;
    cc.seed = 92;
    const Trace coop = opt::cc_run(wrapped, cc);

    REQUIRE(coop.best_cost.size() == plain.best_cost.size());
    CHECK(coop.best_cost == plain.best_cost);
    CHECK(coop.best_point == plain.best_point);
}

TEST_CASE("cooperative PSO solves a separable function") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        CAPTURE(seed);
        FunctionObjective obj = sphere(2);
        CoopConfig cfg;
        cfg.inner = InnerKind::kPso;
        cfg.per_swarm_population = 50;
        cfg.omega = OmegaMode::fixed(1e-3);
        cfg.max_cycles = 100;
        cfg.seed = seed;
        const Trace trace = opt::cc_run(obj, cfg);
        CHECK(trace.final_cost() < 1e-8);
        CHECK(non_increasing(trace.best_cost));
    }
}

TEST_CASE("cooperative ABC solves a separable function") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        CAPTURE(seed);
        FunctionObjective obj = sphere(2);
        CoopConfig cfg;
        cfg.inner = InnerKind::kAbc;
        cfg.per_swarm_population = 15;
        cfg.limit = 5;
        cfg.max_cycles = 100;
        cfg.seed = seed;
        const Trace trace = opt::cc_run(obj, cfg);
        CHECK(trace.final_cost() < 1e-8);
        CHECK(non_increasing(trace.best_cost));
    }
}

TEST_CASE("the context vector prices exactly at every cycle") {
    auto fn = [](const Eigen::Ref<const Eigen::VectorXd>& x) {
        // mildly awkward arithmetic so any re-vectorization slip would show
        double total = 0.0;
        for (Eigen::Index i = 0; i < x.size(); ++i)
            total += (x[i] - 0.1 * static_cast<double>(i)) * (x[i] - 0.1 * static_cast<double>(i)) +
                     0.01 * std::abs(x[i]);
        return total;
    };
    for (const InnerKind inner : {InnerKind::kPso, InnerKind::kAbc}) {
        FunctionObjective obj(4, -1.0, 1.0, fn);
        CoopConfig cfg;
        cfg.inner = inner;
        cfg.per_swarm_population = 10;
        cfg.limit = 3;
        cfg.max_cycles = 25;
        cfg.seed = 7;
        int calls = 0;
        std::vector<double> observed;
        const Trace trace = opt::cc_run(
            obj, cfg, [&](int cycle, const Eigen::VectorXd& values, double cost) {
                REQUIRE(cycle == calls);
                ++calls;
                REQUIRE(values.size() == 4);
                // bitwise agreement with an independent evaluation
                REQUIRE(fn(values) == cost);
                observed.push_back(cost);
            });
        CHECK(calls == 26);
        CHECK(trace.best_cost == observed);
        CHECK(fn(trace.best_point) == trace.final_cost());
    }
}

TEST_CASE("determinism and budget accounting") {
    auto once = [](std::uint64_t seed, InnerKind inner, int cycles) {
        FunctionObjective obj = sphere(3);
        CoopConfig cfg;
        cfg.inner = inner;
        cfg.per_swarm_population = 10;
        cfg.max_cycles = cycles;
        cfg.seed = seed;
        Trace trace = opt::cc_run(obj, cfg);
        REQUIRE(trace.total_evaluations() == obj.evaluation_count());
        return trace;
    };
    for (const InnerKind inner : {InnerKind::kPso, InnerKind::kAbc}) {
        const Trace a = once(5, inner, 40), b = once(5, inner, 40), c = once(6, inner, 40);
        CHECK(a.best_cost == b.best_cost);
        CHECK(a.evaluations == b.evaluations);
        CHECK(a.best_point == b.best_point);
        CHECK(a.best_cost != c.best_cost);

        // zero budget: initialization only — 3 swarms of 10, plus pricing the
        // assembled context once
        const Trace zero = once(5, inner, 0);
        CHECK(zero.best_cost.size() == 1);
        CHECK(zero.evaluations == std::vector<std::int64_t>{31});
    }
}

TEST_CASE("stops early once the target cost is reached") {
    FunctionObjective obj = sphere(2);
    CoopConfig cfg;
    cfg.per_swarm_population = 20;
    cfg.max_cycles = 200;
    cfg.seed = 3;
    cfg.target_cost = 1e-4;
    const Trace trace = opt::cc_run(obj, cfg);
    CHECK(trace.final_cost() <= 1e-4);
    CHECK(trace.best_cost.size() < 201);
}
