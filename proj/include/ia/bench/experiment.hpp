#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ia/bench/leakage_objective.hpp"
#include "ia/leakage.hpp"
#include "ia/opt/pso.hpp"
#include "ia/opt/trace.hpp"
#include "ia/scenario.hpp"

namespace ia::bench {

enum class Algorithm { kPso, kAbc, kCpso, kCabc };

std::string algorithm_name(Algorithm alg);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// One experiment: a scenario, an algorithm, and however many seeded runs.
/// Unset optionals fall back to the per-algorithm defaults (see
/// resolve_params); per-run seeds are master_seed + run index.
struct ExperimentConfig {
    ScenarioSpec scenario;
    Algorithm algorithm = Algorithm::kPso;
    ObjectiveMode objective_mode = ObjectiveMode::kRaw;
    int runs = 10;
    std::uint64_t master_seed = 1;
    bool fixed_channel = false;  // all runs share run 0's channel realization
    std::optional<int> budget;   // PSO iterations, or ABC/CC cycles
    std::optional<double> omega;        // fixed omega for PSO/CPSO
    std::optional<double> omega_scale;  // c in omega = c * r3; overrides omega
    std::optional<int> population;      // swarm size / SN / per-swarm population
    std::optional<int> limit;           // ABC/CABC abandonment threshold
};

/// Concrete algorithm parameters after defaults are applied.
struct ResolvedParams {
    int population = 0;
    int budget = 0;
    opt::OmegaMode omega = opt::OmegaMode::fixed(1.0);
    int limit = 0;
};

ResolvedParams resolve_params(const ExperimentConfig& cfg);

struct RunRecord {
    int run_index = 0;
    std::uint64_t run_seed = 0;
    std::uint64_t channel_seed = 0;
    opt::Trace trace;
    double final_il = 0.0;       // last trace entry
    double normalized_il = 0.0;  // NaN when the solution has degenerate columns
    RankDiagnostics<double> rank;
    std::int64_t evaluations = 0;
    double wall_seconds = 0.0;
};

struct SummaryRow {
    std::string scenario;
    int users = 0;
    std::int64_t dimension = 0;  // real decision-vector length
    std::string algorithm;
    double min_il = 0.0;
    double median_il = 0.0;
    double rank_pass_rate = 0.0;  // fraction of runs whose rank check passed
};

struct ExperimentResult {
    ExperimentConfig config;
    ResolvedParams params;
    std::vector<RunRecord> records;
    SummaryRow summary;
};

/// Runs cfg.runs seeded optimizations. Channels are redrawn per run from a
/// seed derived from the run seed (or from run 0's when fixed_channel is set);
/// the whole result is a pure function of the config. An infeasible scenario
/// (fewer variables than equations) warns on stderr and proceeds.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Order statistics behind a summary row; shared by every aggregation path.
struct Aggregate {
    double min_il = 0.0;
    double median_il = 0.0;  // mean of the middle two for even run counts
    double rank_pass_rate = 0.0;
};

Aggregate aggregate_runs(std::vector<double> final_ils, int rank_passed);

SummaryRow summarize(const ExperimentConfig& cfg, const std::vector<RunRecord>& records);

}  // namespace ia::bench
