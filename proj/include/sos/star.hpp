#pragma once

#include "sos/dataset.hpp"
#include "sos/stats.hpp"
#include "sos/validator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sos {

struct Rollout {
    Problem problem;
    std::string trajectory;
    std::string strategy = "model";
    std::uint64_t seed = 0;
};

struct StarFilterOptions {
    GoalRule goal = GoalRule::AnyResult;
    /// Also drop correct rollouts that contain arithmetic, exploration or other
    /// errors off the solution path.
    bool require_clean = false;
};

/// Keeps the rollouts that validate as correct, one per problem (the first), in
/// input order. Kept trajectories are re-serialized from the parsed trace.
[[nodiscard]] std::vector<DatasetRecord> star_filter(const std::vector<Rollout>& rollouts,
                                                     const StarFilterOptions& options = {});

[[nodiscard]] Rollout to_rollout(const DatasetRecord& record);

struct IterationStats {
    std::size_t iteration = 0;
    std::size_t rollouts = 0;
    std::size_t kept = 0;
    std::size_t validation_correct = 0;
    std::size_t validation_total = 0;
    /// Mean states explored among kept trajectories; absent when nothing was kept.
    std::optional<double> mean_states_explored;

    [[nodiscard]] double accuracy() const;
};

/// Stats for one STaR round: filter `rollouts`, score `validation` (rollouts on the
/// fixed validation problems).
[[nodiscard]] IterationStats iteration_stats(std::size_t iteration, const std::vector<Rollout>& rollouts,
                                             const std::vector<Rollout>& validation,
                                             const StarFilterOptions& options = {});

struct IterationDelta {
    Interval accuracy_before;
    Interval accuracy_after;
    double accuracy_delta = 0.0;
    std::optional<double> states_explored_delta;
    long long kept_delta = 0;
};

[[nodiscard]] IterationDelta iteration_report(const IterationStats& before, const IterationStats& after);

}  // namespace sos
