#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ia/opt/abc.hpp"

using namespace ia;
using opt::AbcColony;
using opt::AbcConfig;
using opt::EvalFn;
using opt::FunctionObjective;
using opt::Trace;

namespace {

FunctionObjective sphere(int dimension) {
    return FunctionObjective(dimension, -1.0, 1.0,
                             [](const Eigen::Ref<const Eigen::VectorXd>& x) {
                                 return x.squaredNorm();
                             });
}

bool non_increasing(const std::vector<double>& v) {
    for (std::size_t k = 1; k < v.size(); ++k)
        if (v[k] > v[k - 1]) return false;
    return true;
}

}  // namespace

TEST_CASE("fitness transform") {
    CHECK(opt::fitness_transform(0.0) == 1.0);
    CHECK(opt::fitness_transform(1.0) == 0.5);
    CHECK(opt::fitness_transform(3.0) == 0.25);
    CHECK(opt::fitness_transform(std::numeric_limits<double>::infinity()) == 0.0);
    CHECK_THROWS_AS(opt::fitness_transform(-0.1), std::domain_error);
}

TEST_CASE("roulette probabilities") {
    // equal costs -> uniform
    const Eigen::VectorXd equal = opt::roulette_probabilities(Eigen::VectorXd::Constant(5, 2.0));
    for (Eigen::Index i = 0; i < 5; ++i) CHECK(equal[i] == doctest::Approx(0.2).epsilon(1e-15));

    // arbitrary costs -> normalized, cheaper gets more
    Eigen::VectorXd costs(3);
    costs << 0.0, 1.0, 3.0;
    const Eigen::VectorXd p = opt::roulette_probabilities(costs);
    CHECK(std::abs(p.sum() - 1.0) <= 1e-12);
    CHECK(p[0] > p[1]);
    CHECK(p[1] > p[2]);
    CHECK(p[0] == doctest::Approx(1.0 / 1.75).epsilon(1e-12));

    // all sources at infinite cost -> uniform fallback, still sums to 1
    const Eigen::VectorXd inf = opt::roulette_probabilities(
        Eigen::VectorXd::Constant(4, std::numeric_limits<double>::infinity()));
    CHECK(std::abs(inf.sum() - 1.0) <= 1e-12);
    CHECK(inf[0] == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("config validation") {
    AbcConfig bad;
    bad.food_sources = 1;
    CHECK_THROWS_AS(opt::validate(bad), std::invalid_argument);
    bad = AbcConfig{};
    bad.limit = 0;
    CHECK_THROWS_AS(opt::validate(bad), std::invalid_argument);
    bad = AbcConfig{};
    bad.max_cycles = -2;
    CHECK_THROWS_AS(opt::validate(bad), std::invalid_argument);
}

TEST_CASE("init draws inside the box and records the best source") {
    Rng rng(14);
    FunctionObjective obj = sphere(3);
    const EvalFn eval = [&](const Eigen::Ref<const Eigen::VectorXd>& x) {
        return obj.evaluate(x);
    };
    AbcColony colony;
    opt::abc_colony_init(colony, 3, 12, obj.lower_bounds(), obj.upper_bounds(), rng, eval);
    CHECK(colony.position.rows() == 3);
    CHECK(colony.position.cols() == 12);
    CHECK((colony.position.array() >= -1.0).all());
    CHECK((colony.position.array() <= 1.0).all());
    CHECK(colony.trial.isZero());
    CHECK(colony.best_cost == colony.cost.minCoeff());
    CHECK(obj.evaluation_count() == 12);
}

TEST_CASE("greedy selection never raises a source's cost") {
    Rng rng(15);
    FunctionObjective obj = sphere(4);
    const EvalFn eval = [&](const Eigen::Ref<const Eigen::VectorXd>& x) {
        return obj.evaluate(x);
    };
    AbcColony colony;
    opt::abc_colony_init(colony, 4, 10, obj.lower_bounds(), obj.upper_bounds(), rng, eval);
    for (int cycle = 0; cycle < 30; ++cycle) {
        const Eigen::VectorXd before = colony.cost;
        const Eigen::VectorXi trials_before = colony.trial;
        opt::abc_colony_step(colony, 1000000, false, obj.lower_bounds(), obj.upper_bounds(), rng,
                             eval);  // limit high enough that no scout fires
        for (Eigen::Index i = 0; i < before.size(); ++i) {
            REQUIRE(colony.cost[i] <= before[i]);
            if (colony.cost[i] < before[i]) {
                // improvement resets the counter; only onlooker rejections can
                // bump it again afterwards
                REQUIRE(colony.trial[i] <= 10);
            } else {
                // the employed pass touches every source, so a cycle with no
                // improvement adds at least one rejection
                REQUIRE(colony.trial[i] >= trials_before[i] + 1);
            }
        }
    }
}

TEST_CASE("exactly one scout fires per cycle, on the most exhausted source") {
    // constant objective: no candidate is ever strictly better, so trials only
    // grow and the scout phase is the only thing that can reset them
    FunctionObjective obj(2, -1.0, 1.0,
                          [](const Eigen::Ref<const Eigen::VectorXd>&) { return 1.0; });
    const EvalFn eval = [&](const Eigen::Ref<const Eigen::VectorXd>& x) {
        return obj.evaluate(x);
    };
    Rng rng(16);
    AbcColony colony;
    opt::abc_colony_init(colony, 2, 3, obj.lower_bounds(), obj.upper_bounds(), rng, eval);
    colony.trial << 10, 7, 9;  // all already past limit = 5

    const std::int64_t before_evals = obj.evaluation_count();
    const Eigen::MatrixXd before_positions = colony.position;
    opt::abc_colony_step(colony, 5, false, obj.lower_bounds(), obj.upper_bounds(), rng, eval);

    // employed (3) + onlooker (3) + exactly one scout
    CHECK(obj.evaluation_count() - before_evals == 7);
    int reset = 0;
    for (Eigen::Index i = 0; i < 3; ++i) {
        if (colony.trial[i] == 0) {
            ++reset;
            CHECK(colony.position.col(i) != before_positions.col(i));
            CHECK((colony.position.col(i).array() >= -1.0).all());
            CHECK((colony.position.col(i).array() <= 1.0).all());
        } else {
            // still past the limit: exhausted, but not this cycle's scout
            CHECK(colony.trial[i] >= 8);
        }
    }
    CHECK(reset == 1);
    // best-so-far memo survives scouting
    CHECK(colony.best_cost == 1.0);
}

TEST_CASE("solves a small sphere") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        CAPTURE(seed);
        FunctionObjective obj = sphere(2);
        AbcConfig cfg;
        cfg.food_sources = 30;
        cfg.limit = 5;
        cfg.max_cycles = 500;
        cfg.seed = seed;
        const Trace trace = opt::abc_run(obj, cfg);
        CHECK(trace.final_cost() < 1e-4);
        CHECK(non_increasing(trace.best_cost));
    }
}

TEST_CASE("run accounting, determinism, and zero budget") {
    auto once = [](std::uint64_t seed, int cycles) {
        FunctionObjective obj = sphere(3);
        AbcConfig cfg;
        cfg.food_sources = 8;
        cfg.limit = 4;
        cfg.max_cycles = cycles;
        cfg.seed = seed;
        Trace trace = opt::abc_run(obj, cfg);
        REQUIRE(trace.total_evaluations() == obj.evaluation_count());
        return trace;
    };
    const Trace a = once(31, 60), b = once(31, 60), c = once(32, 60);
    CHECK(a.best_cost == b.best_cost);
    CHECK(a.evaluations == b.evaluations);
    CHECK(a.best_point == b.best_point);
    CHECK(a.best_cost != c.best_cost);
    REQUIRE(a.best_cost.size() == 61);
    CHECK(a.evaluations.front() == 8);
    // each cycle spends 2*SN evaluations plus at most one scout
    for (std::size_t k = 1; k < a.evaluations.size(); ++k) {
        const std::int64_t spent = a.evaluations[k] - a.evaluations[k - 1];
        CHECK(spent >= 16);
        CHECK(spent <= 17);
    }

    const Trace zero = once(31, 0);
    CHECK(zero.best_cost.size() == 1);
    CHECK(zero.evaluations == std::vector<std::int64_t>{8});
}

TEST_CASE("the recorded best point prices at the recorded best cost") {
    FunctionObjective obj = sphere(2);
    AbcConfig cfg;
    cfg.food_sources = 10;
    cfg.max_cycles = 80;
    cfg.seed = 77;
    const Trace trace = opt::abc_run(obj, cfg);
    FunctionObjective fresh = sphere(2);
    CHECK(fresh.evaluate(trace.best_point) == trace.final_cost());
}
