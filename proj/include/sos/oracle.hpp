#pragma once

#include "sos/domain.hpp"
#include "sos/strategies.hpp"
#include "sos/trace.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sos {

struct SolveResult {
    bool solvable = false;
    /// Shortest operation sequence reaching the goal; the first one in enumeration
    /// order among equally short ones.
    std::optional<std::vector<ArithmeticOp>> one_path;
    /// Operation sequences that end on the goal (a sequence stops at its first goal).
    std::uint64_t solution_count = 0;
};

[[nodiscard]] SolveResult solve_exhaustive(const Problem& problem, GoalRule rule = GoalRule::AnyResult);

/// Optimal-path trace of `path`: the states along the path only, generated nodes
/// numbered from #2, ending in the goal line.
[[nodiscard]] Trajectory optimal_path_trajectory(const Problem& problem, const std::vector<ArithmeticOp>& path);

/// Oracle trace for the problem; `No Solution Found` after the root when unsolvable.
[[nodiscard]] Trajectory optimal_trajectory(const Problem& problem, GoalRule rule = GoalRule::AnyResult);

using DifficultyMask = std::uint16_t;

inline constexpr DifficultyMask kAllStrategiesMask = (1u << 12) - 1;

/// Bit i is set iff all_strategies()[i] reaches the goal.
[[nodiscard]] DifficultyMask classify_difficulty(const Problem& problem);

/// Oracle-solvable and no symbolic strategy succeeds.
[[nodiscard]] bool is_difficult(const Problem& problem);

}  // namespace sos
