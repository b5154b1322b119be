#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>

#include <Eigen/Core>

namespace ia::opt {

/// Real-vector box-constrained cost function with an evaluation counter.
///
/// evaluate() must be a deterministic function of x; the counter goes up by
/// exactly one per call. A single instance is not shared between concurrent
/// optimizer runs — each run owns its objective (and with it, its counter).
class Objective {
public:
    Objective(Eigen::VectorXd lower, Eigen::VectorXd upper)
        : lower_(std::move(lower)), upper_(std::move(upper)) {
        if (lower_.size() != upper_.size() || lower_.size() == 0)
            throw std::invalid_argument("objective: bound vectors must share a positive length");
        if ((lower_.array() > upper_.array()).any())
            throw std::invalid_argument("objective: lower bound exceeds upper bound");
    }
    virtual ~Objective() = default;

    int dimension() const { return static_cast<int>(lower_.size()); }
    const Eigen::VectorXd& lower_bounds() const { return lower_; }
    const Eigen::VectorXd& upper_bounds() const { return upper_; }

    double evaluate(const Eigen::Ref<const Eigen::VectorXd>& x) {
        if (x.size() != lower_.size())
            throw std::invalid_argument("objective: vector has the wrong dimension");
        ++evaluation_count_;
        return do_evaluate(x);
    }

    std::int64_t evaluation_count() const { return evaluation_count_; }

private:
    virtual double do_evaluate(const Eigen::Ref<const Eigen::VectorXd>& x) = 0;

    Eigen::VectorXd lower_;
    Eigen::VectorXd upper_;
    std::int64_t evaluation_count_ = 0;
};

/// Adapter for plain callables, mostly used by tests and benchmarks.
class FunctionObjective final : public Objective {
public:
    using Fn = std::function<double(const Eigen::Ref<const Eigen::VectorXd>&)>;

    FunctionObjective(Eigen::VectorXd lower, Eigen::VectorXd upper, Fn fn)
        : Objective(std::move(lower), std::move(upper)), fn_(std::move(fn)) {}

    FunctionObjective(int dimension, double lower, double upper, Fn fn)
        : FunctionObjective(Eigen::VectorXd::Constant(dimension, lower),
                            Eigen::VectorXd::Constant(dimension, upper), std::move(fn)) {}

private:
    double do_evaluate(const Eigen::Ref<const Eigen::VectorXd>& x) override { return fn_(x); }

    Fn fn_;
};

}  // namespace ia::opt
