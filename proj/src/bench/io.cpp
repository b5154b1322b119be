#include "ia/bench/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "ia/serialization.hpp"

namespace ia::bench {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return in;
}

// scenario labels contain commas, so text fields are quoted on the way out
// and both forms are accepted on the way in
std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (const char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    for (std::size_t at = 0; at < line.size(); ++at) {
        const char c = line[at];
        if (in_quotes) {
            if (c == '"' && at + 1 < line.size() && line[at + 1] == '"') {
                field += '"';
                ++at;
            } else if (c == '"') {
                in_quotes = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

double parse_real(const std::string& text, const std::filesystem::path& path) {
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end == text.c_str()) throw IoError("bad number '" + text + "' in " + path.string());
    return value;
}

long long parse_integer(const std::string& text, const std::filesystem::path& path) {
    char* end = nullptr;
    const long long value = std::strtoll(text.c_str(), &end, 10);
    if (end == text.c_str()) throw IoError("bad integer '" + text + "' in " + path.string());
    return value;
}

std::string format_rate(double rate) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%.2f", rate);
    return buf;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

// ---- convergence traces ----------------------------------------------------

void emit_trace(const opt::Trace& trace, const std::filesystem::path& path) {
    std::ofstream out = open_output(path);
    out << "iteration,best_il,evaluations\n";
    for (std::size_t i = 0; i < trace.best_cost.size(); ++i)
        out << i << "," << format_double(trace.best_cost[i]) << "," << trace.evaluations[i] << "\n";
    finish_output(out, path);
}

opt::Trace parse_trace(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    std::string line;
    if (!std::getline(in, line) || trim(line) != "iteration,best_il,evaluations")
        throw IoError("missing trace header in " + path.string());
    opt::Trace trace;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 3) throw IoError("malformed trace row in " + path.string());
        trace.best_cost.push_back(parse_real(fields[1], path));
        trace.evaluations.push_back(parse_integer(fields[2], path));
    }
    if (trace.best_cost.empty()) throw IoError("empty trace in " + path.string());
    return trace;
}

// ---- per-run records ---------------------------------------------------------

namespace {
constexpr const char* kRecordsHeader =
    "scenario,users,dimension,algorithm,run,seed,final_il,normalized_il,rank_satisfied,"
    "evaluations,wall_seconds";
}

std::vector<RecordRow> record_rows(const ExperimentResult& result) {
    std::vector<RecordRow> rows;
    rows.reserve(result.records.size());
    for (const RunRecord& rec : result.records) {
        RecordRow row;
        row.scenario = result.summary.scenario;
        row.users = result.summary.users;
        row.dimension = result.summary.dimension;
        row.algorithm = result.summary.algorithm;
        row.run_index = rec.run_index;
        row.run_seed = rec.run_seed;
        row.final_il = rec.final_il;
        row.normalized_il = rec.normalized_il;
        row.rank_satisfied = rec.rank.satisfied;
        row.evaluations = rec.evaluations;
        row.wall_seconds = rec.wall_seconds;
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_records_csv(const std::vector<RecordRow>& rows, const std::filesystem::path& path) {
    std::ofstream out = open_output(path);
    out << kRecordsHeader << "\n";
    for (const RecordRow& row : rows) {
        out << csv_field(row.scenario) << "," << row.users << "," << row.dimension << ","
            << csv_field(row.algorithm) << "," << row.run_index << "," << row.run_seed << ","
            << format_double(row.final_il) << "," << format_double(row.normalized_il) << ","
            << (row.rank_satisfied ? 1 : 0) << "," << row.evaluations << ","
            << format_double(row.wall_seconds) << "\n";
    }
    finish_output(out, path);
}

std::vector<RecordRow> parse_records_csv(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    std::string line;
    if (!std::getline(in, line) || trim(line) != kRecordsHeader)
        throw IoError("missing records header in " + path.string());
    std::vector<RecordRow> rows;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 11) throw IoError("malformed records row in " + path.string());
        RecordRow row;
        row.scenario = fields[0];
        row.users = static_cast<int>(parse_integer(fields[1], path));
        row.dimension = parse_integer(fields[2], path);
        row.algorithm = fields[3];
        row.run_index = static_cast<int>(parse_integer(fields[4], path));
        row.run_seed = static_cast<std::uint64_t>(parse_integer(fields[5], path));
        row.final_il = parse_real(fields[6], path);
        row.normalized_il = parse_real(fields[7], path);
        row.rank_satisfied = parse_integer(fields[8], path) != 0;
        row.evaluations = parse_integer(fields[9], path);
        row.wall_seconds = parse_real(fields[10], path);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SummaryRow> summarize_rows(const std::vector<RecordRow>& rows) {
    // key: (users, scenario, algorithm) — doubles as the output sort order
    std::map<std::tuple<int, std::string, std::string>, std::vector<const RecordRow*>> groups;
    for (const RecordRow& row : rows)
        groups[{row.users, row.scenario, row.algorithm}].push_back(&row);

    std::vector<SummaryRow> out;
    out.reserve(groups.size());
    for (const auto& [key, members] : groups) {
        std::vector<double> finals;
        finals.reserve(members.size());
        int passed = 0;
        for (const RecordRow* row : members) {
            finals.push_back(row->final_il);
            if (row->rank_satisfied) ++passed;
        }
        const Aggregate agg = aggregate_runs(std::move(finals), passed);
        SummaryRow summary;
        summary.users = std::get<0>(key);
        summary.scenario = std::get<1>(key);
        summary.algorithm = std::get<2>(key);
        summary.dimension = members.front()->dimension;
        summary.min_il = agg.min_il;
        summary.median_il = agg.median_il;
        summary.rank_pass_rate = agg.rank_pass_rate;
        out.push_back(std::move(summary));
    }
    return out;
}

// ---- summary tables ----------------------------------------------------------

void write_summary_csv(const std::vector<SummaryRow>& rows, const std::filesystem::path& path) {
    std::ofstream out = open_output(path);
    out << "scenario,dimension,algorithm,min_il,median_il,rank_pass_rate\n";
    for (const SummaryRow& row : rows) {
        out << csv_field(row.scenario) << "," << row.dimension << "," << csv_field(row.algorithm)
            << "," << format_double(row.min_il) << "," << format_double(row.median_il) << ","
            << format_rate(row.rank_pass_rate) << "\n";
    }
    finish_output(out, path);
}

std::string summary_text(const std::vector<SummaryRow>& rows) {
    auto format_il = [](double value) {
        char buf[24];
        std::snprintf(buf, sizeof(buf), "%.6g", value);
        return std::string(buf);
    };
    const std::vector<std::string> header = {"scenario", "dim",       "algorithm",
                                             "min_il",   "median_il", "rank_pass_rate"};
    std::vector<std::vector<std::string>> cells;
    cells.push_back(header);
    for (const SummaryRow& row : rows)
        cells.push_back({row.scenario, std::to_string(row.dimension), row.algorithm,
                         format_il(row.min_il), format_il(row.median_il),
                         format_rate(row.rank_pass_rate)});

    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
        }
        out << "\n";
    }
    return out.str();
}

void print_summary(const std::vector<SummaryRow>& rows, std::ostream& out) {
    out << summary_text(rows);
}

// ---- experiment config files ---------------------------------------------------

namespace {

int parse_config_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const int parsed = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer for '" + key + "': " + value);
    }
}

std::uint64_t parse_config_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const std::uint64_t parsed = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer for '" + key + "': " + value);
    }
}

double parse_config_real(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double parsed = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw ConfigError("config: bad number for '" + key + "': " + value);
    }
}

bool parse_config_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("config: bad boolean for '" + key + "': " + value);
}

}  // namespace

void set_config_key(ConfigDraft& draft, const std::string& key, const std::string& value) {
    if (key == "scenario.K") draft.users = parse_config_int(key, value);
    else if (key == "scenario.M") draft.tx_antennas = parse_config_int(key, value);
    else if (key == "scenario.N") draft.rx_antennas = parse_config_int(key, value);
    else if (key == "scenario.d") draft.streams = parse_config_int(key, value);
    else if (key == "alg") draft.alg = value;
    else if (key == "omega") draft.omega = parse_config_real(key, value);
    else if (key == "c") draft.omega_scale = parse_config_real(key, value);
    else if (key == "swarm_size" || key == "SN") draft.population = parse_config_int(key, value);
    else if (key == "limit") draft.limit = parse_config_int(key, value);
    else if (key == "budget") draft.budget = parse_config_int(key, value);
    else if (key == "runs") draft.runs = parse_config_int(key, value);
    else if (key == "seed") draft.seed = parse_config_u64(key, value);
    else if (key == "objective_mode") draft.objective_mode = value;
    else if (key == "fixed_channel") draft.fixed_channel = parse_config_bool(key, value);
    else if (key == "outdir") draft.outdir = value;
    else throw ConfigError("config: unknown key '" + key + "'");
}

ConfigDraft parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file " + path.string());
    ConfigDraft draft;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) + " of " + path.string() +
                              " is not `key = value`");
        set_config_key(draft, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return draft;
}

void merge_overrides(ConfigDraft& base, const ConfigDraft& overrides) {
    auto take = [](auto& dst, const auto& src) {
        if (src) dst = src;
    };
    take(base.users, overrides.users);
    take(base.tx_antennas, overrides.tx_antennas);
    take(base.rx_antennas, overrides.rx_antennas);
    take(base.streams, overrides.streams);
    take(base.alg, overrides.alg);
    take(base.omega, overrides.omega);
    take(base.omega_scale, overrides.omega_scale);
    take(base.population, overrides.population);
    take(base.limit, overrides.limit);
    take(base.budget, overrides.budget);
    take(base.runs, overrides.runs);
    take(base.seed, overrides.seed);
    take(base.objective_mode, overrides.objective_mode);
    take(base.fixed_channel, overrides.fixed_channel);
    take(base.outdir, overrides.outdir);
}

ExperimentConfig materialize(const ConfigDraft& draft) {
    if (!draft.users || !draft.tx_antennas || !draft.rx_antennas || !draft.streams)
        throw ConfigError("config: scenario.K, scenario.M, scenario.N, scenario.d are required");
    if (!draft.alg) throw ConfigError("config: alg is required (pso | abc | cpso | cabc)");

    ExperimentConfig cfg;
    try {
        cfg.scenario =
            make_scenario(*draft.users, *draft.tx_antennas, *draft.rx_antennas, *draft.streams);
    } catch (const std::invalid_argument& err) {
        throw ConfigError(std::string("config: ") + err.what());
    }
    const auto algorithm = parse_algorithm(*draft.alg);
    if (!algorithm) throw ConfigError("config: unknown algorithm '" + *draft.alg + "'");
    cfg.algorithm = *algorithm;

    if (draft.objective_mode) {
        if (*draft.objective_mode == "raw") cfg.objective_mode = ObjectiveMode::kRaw;
        else if (*draft.objective_mode == "normalized") cfg.objective_mode = ObjectiveMode::kNormalized;
        else throw ConfigError("config: objective_mode must be raw or normalized");
    }
    cfg.runs = draft.runs.value_or(10);
    if (cfg.runs < 1) throw ConfigError("config: runs must be at least 1");
    cfg.master_seed = draft.seed.value_or(1);
    cfg.fixed_channel = draft.fixed_channel.value_or(false);
    if (draft.budget && *draft.budget < 0) throw ConfigError("config: budget must be nonnegative");
    cfg.budget = draft.budget;
    cfg.omega = draft.omega;
    cfg.omega_scale = draft.omega_scale;
    cfg.population = draft.population;
    cfg.limit = draft.limit;
    return cfg;
}

}  // namespace ia::bench
