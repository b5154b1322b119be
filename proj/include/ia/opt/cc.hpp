#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include <Eigen/Core>

#include "ia/opt/abc.hpp"
#include "ia/opt/objective.hpp"
#include "ia/opt/pso.hpp"
#include "ia/opt/trace.hpp"

namespace ia::opt {

enum class InnerKind { kPso, kAbc };

/// Cooperative coevolution with 1-D subcomponents: dimension j of the problem
/// is searched by its own population (a PSO swarm or an ABC colony).
struct CoopConfig {
    InnerKind inner = InnerKind::kPso;
    int per_swarm_population = 50;
    OmegaMode omega = OmegaMode::fixed(1e-3);  // inner PSO only
    int limit = 5;                             // inner ABC only
    int max_cycles = 200;
    std::uint64_t seed = 1;
    bool clamp = false;
    std::optional<double> target_cost;
};

void validate(const CoopConfig& cfg);

/// Called after initialization (cycle 0) and after every completed cycle.
/// cost is always exactly objective(values) — re-evaluable on demand.
using CycleObserver = std::function<void(int cycle, const Eigen::VectorXd& values, double cost)>;

/// Runs one cooperative optimization. The full-problem incumbent is the
/// context vector: component j holds swarm j's global best, and candidate
/// values for swarm j are priced by substituting them into component j and
/// calling the full objective. Swarms take turns in fixed order 0..n-1; a
/// cycle is one round of turns, and the trace records the context cost after
/// each cycle. With n = 1 the run degenerates to the inner optimizer on the
/// full problem, reproducing its cost trace exactly.
Trace cc_run(Objective& objective, const CoopConfig& cfg, const CycleObserver& observe = {});

}  // namespace ia::opt
