#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace ia::opt {

/// Per-run convergence record. Entry 0 describes the freshly evaluated
/// initial population; entry t the state after iteration (or cycle) t.
/// best_cost is non-increasing; evaluations holds the cumulative number of
/// objective calls made by this run up to each entry.
struct Trace {
    std::vector<double> best_cost;
    std::vector<std::int64_t> evaluations;
    Eigen::VectorXd best_point;

    double final_cost() const { return best_cost.back(); }
    std::int64_t total_evaluations() const { return evaluations.back(); }
};

}  // namespace ia::opt
