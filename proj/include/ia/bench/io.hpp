#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ia/bench/experiment.hpp"
#include "ia/opt/trace.hpp"

namespace ia::bench {

/// Bad or missing configuration (CLI exit code 1).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem trouble (CLI exit code 2).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- convergence traces ----------------------------------------------------
// CSV, header `iteration,best_il,evaluations`; row 0 is the initial
// population, the evaluations column is cumulative. Values survive the round
// trip bit-exactly.

void emit_trace(const opt::Trace& trace, const std::filesystem::path& path);
opt::Trace parse_trace(const std::filesystem::path& path);

// ---- per-run records -------------------------------------------------------

/// One line of records.csv — everything `table` needs to re-aggregate.
struct RecordRow {
    std::string scenario;
    int users = 0;
    std::int64_t dimension = 0;
    std::string algorithm;
    int run_index = 0;
    std::uint64_t run_seed = 0;
    double final_il = 0.0;
    double normalized_il = 0.0;  // NaN when the final solution was degenerate
    bool rank_satisfied = false;
    std::int64_t evaluations = 0;
    double wall_seconds = 0.0;
};

std::vector<RecordRow> record_rows(const ExperimentResult& result);
void write_records_csv(const std::vector<RecordRow>& rows, const std::filesystem::path& path);
std::vector<RecordRow> parse_records_csv(const std::filesystem::path& path);

/// Groups records by (scenario, algorithm) and aggregates each group; rows
/// come back sorted by user count, then scenario, then algorithm.
std::vector<SummaryRow> summarize_rows(const std::vector<RecordRow>& rows);

// ---- summary tables ----------------------------------------------------------
// CSV columns: scenario,dimension,algorithm,min_il,median_il,rank_pass_rate
// (IL at full precision, pass rate with two decimals); plus an aligned
// plain-text rendering for terminals.

void write_summary_csv(const std::vector<SummaryRow>& rows, const std::filesystem::path& path);
std::string summary_text(const std::vector<SummaryRow>& rows);
void print_summary(const std::vector<SummaryRow>& rows, std::ostream& out);

// ---- experiment config files -------------------------------------------------
// Flat `key = value` text, '#' comments. Keys: scenario.K, scenario.M,
// scenario.N, scenario.d, alg, omega, c, swarm_size, SN, limit, budget, runs,
// seed, objective_mode, fixed_channel, outdir. Every key can be overridden by
// a CLI flag, so the draft keeps unset fields distinguishable.

struct ConfigDraft {
    std::optional<int> users;
    std::optional<int> tx_antennas;
    std::optional<int> rx_antennas;
    std::optional<int> streams;
    std::optional<std::string> alg;
    std::optional<double> omega;
    std::optional<double> omega_scale;  // key `c`
    std::optional<int> population;      // keys `swarm_size` and `SN`
    std::optional<int> limit;
    std::optional<int> budget;
    std::optional<int> runs;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> objective_mode;
    std::optional<bool> fixed_channel;
    std::optional<std::string> outdir;
};

ConfigDraft parse_config_file(const std::filesystem::path& path);
void set_config_key(ConfigDraft& draft, const std::string& key, const std::string& value);

/// Copies every field that is set in `overrides` onto `base`.
void merge_overrides(ConfigDraft& base, const ConfigDraft& overrides);

/// Applies defaults and validates; scenario and algorithm are mandatory.
ExperimentConfig materialize(const ConfigDraft& draft);

}  // namespace ia::bench
