#include "ia/bench/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "ia/opt/abc.hpp"
#include "ia/opt/cc.hpp"
#include "ia/rng.hpp"

namespace ia::bench {

namespace {
// seed-stream tags; channels and optimizer state never share a sequence
constexpr std::uint64_t kChannelStream = 1;
constexpr std::uint64_t kOptimizerStream = 2;
}  // namespace

std::string algorithm_name(Algorithm alg) {
    switch (alg) {
        case Algorithm::kPso: return "pso";
        case Algorithm::kAbc: return "abc";
        case Algorithm::kCpso: return "cpso";
        case Algorithm::kCabc: return "cabc";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    if (name == "pso") return Algorithm::kPso;
    if (name == "abc") return Algorithm::kAbc;
    if (name == "cpso") return Algorithm::kCpso;
    if (name == "cabc") return Algorithm::kCabc;
    return std::nullopt;
}

ResolvedParams resolve_params(const ExperimentConfig& cfg) {
    ResolvedParams p;
    switch (cfg.algorithm) {
        case Algorithm::kPso:
            p.population = cfg.population.value_or(100);
            p.budget = cfg.budget.value_or(5000);
            p.omega = opt::OmegaMode::fixed(3.0);
            break;
        case Algorithm::kAbc:
            p.population = cfg.population.value_or(100);
            p.budget = cfg.budget.value_or(1000);
            break;
        case Algorithm::kCpso:
            p.population = cfg.population.value_or(50);
            p.budget = cfg.budget.value_or(200);
            p.omega = opt::OmegaMode::fixed(1e-3);
            break;
        case Algorithm::kCabc:
            p.population = cfg.population.value_or(15);
            p.budget = cfg.budget.value_or(200);
            break;
    }
    p.limit = cfg.limit.value_or(5);
    if (cfg.omega) p.omega = opt::OmegaMode::fixed(*cfg.omega);
    if (cfg.omega_scale) p.omega = opt::OmegaMode::random_scaled(*cfg.omega_scale);
    return p;
}

namespace {

opt::Trace dispatch_run(LeakageObjective& objective, const ExperimentConfig& cfg,
                        const ResolvedParams& p, std::uint64_t seed) {
    switch (cfg.algorithm) {
        case Algorithm::kPso: {
            opt::PsoConfig c;
            c.swarm_size = p.population;
            c.omega = p.omega;
            c.max_iterations = p.budget;
            c.seed = seed;
            return opt::pso_run(objective, c);
        }
        case Algorithm::kAbc: {
            opt::AbcConfig c;
            c.food_sources = p.population;
            c.limit = p.limit;
            c.max_cycles = p.budget;
            c.seed = seed;
            return opt::abc_run(objective, c);
        }
        case Algorithm::kCpso:
        case Algorithm::kCabc: {
            opt::CoopConfig c;
            c.inner = cfg.algorithm == Algorithm::kCpso ? opt::InnerKind::kPso : opt::InnerKind::kAbc;
            c.per_swarm_population = p.population;
            c.omega = p.omega;
            c.limit = p.limit;
            c.max_cycles = p.budget;
            c.seed = seed;
            return opt::cc_run(objective, c);
        }
    }
    throw std::logic_error("unreachable algorithm");
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    validate_scenario(cfg.scenario);
    if (cfg.runs < 1) throw std::invalid_argument("experiment: runs must be at least 1");
    const ResolvedParams params = resolve_params(cfg);
    if (params.budget < 0) throw std::invalid_argument("experiment: budget must be nonnegative");

    if (!check_feasibility(cfg.scenario)) {
        const VariableCount vars = count_variables(cfg.scenario);
        std::cerr << "warning: scenario " << scenario_label(cfg.scenario) << " is infeasible (N_v="
                  << vars.complex_count << " < N_e=" << count_equations(cfg.scenario) << ")\n";
    }

    ExperimentResult result;
    result.config = cfg;
    result.params = params;
    result.records.reserve(static_cast<std::size_t>(cfg.runs));

    for (int run = 0; run < cfg.runs; ++run) {
        RunRecord rec;
        rec.run_index = run;
        rec.run_seed = cfg.master_seed + static_cast<std::uint64_t>(run);
        const std::uint64_t channel_base = cfg.fixed_channel ? cfg.master_seed : rec.run_seed;
        rec.channel_seed = derive_seed(channel_base, kChannelStream);

        LeakageObjective objective(generate_channels(cfg.scenario, rec.channel_seed),
                                   cfg.objective_mode);
        const auto started = std::chrono::steady_clock::now();
        rec.trace = dispatch_run(objective, cfg, params, derive_seed(rec.run_seed, kOptimizerStream));
        rec.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

        rec.final_il = rec.trace.final_cost();
        rec.evaluations = rec.trace.total_evaluations();
        const BeamformerSet<double> solution = decode(rec.trace.best_point, cfg.scenario);
        rec.rank = rank_check(objective.channels(), solution);
        try {
            rec.normalized_il = leakage_normalized(objective.channels(), solution);
        } catch (const std::domain_error&) {
            rec.normalized_il = std::numeric_limits<double>::quiet_NaN();
        }
        result.records.push_back(std::move(rec));
    }

    result.summary = summarize(cfg, result.records);
    return result;
}

Aggregate aggregate_runs(std::vector<double> final_ils, int rank_passed) {
    if (final_ils.empty()) throw std::invalid_argument("aggregate_runs: no runs");
    std::sort(final_ils.begin(), final_ils.end());
    Aggregate agg;
    agg.min_il = final_ils.front();
    const std::size_t mid = final_ils.size() / 2;
    agg.median_il =
        final_ils.size() % 2 == 1 ? final_ils[mid] : 0.5 * (final_ils[mid - 1] + final_ils[mid]);
    agg.rank_pass_rate = static_cast<double>(rank_passed) / static_cast<double>(final_ils.size());
    return agg;
}

SummaryRow summarize(const ExperimentConfig& cfg, const std::vector<RunRecord>& records) {
    if (records.empty()) throw std::invalid_argument("summarize: no records");
    SummaryRow row;
    row.scenario = scenario_label(cfg.scenario);
    row.users = cfg.scenario.users;
    row.dimension = count_variables(cfg.scenario).real_count;
    row.algorithm = algorithm_name(cfg.algorithm);

    std::vector<double> finals;
    finals.reserve(records.size());
    int passed = 0;
    for (const RunRecord& rec : records) {
        finals.push_back(rec.final_il);
        if (rec.rank.satisfied) ++passed;
    }
    const Aggregate agg = aggregate_runs(std::move(finals), passed);
    row.min_il = agg.min_il;
    row.median_il = agg.median_il;
    row.rank_pass_rate = agg.rank_pass_rate;
    return row;
}

}  // namespace ia::bench
