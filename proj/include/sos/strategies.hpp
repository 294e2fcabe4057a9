#pragma once

#include "sos/domain.hpp"
#include "sos/trace.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sos {

enum class HeuristicKind { Sum, Multiply };

/// |target - sum(remaining)|
[[nodiscard]] Number h_sum(const std::vector<Number>& remaining, Number target);

/// min over positive divisors f of target of |f - sum(remaining)|
[[nodiscard]] Number h_multiply(const std::vector<Number>& remaining, Number target);

[[nodiscard]] Number evaluate(HeuristicKind kind, const std::vector<Number>& remaining, Number target);

enum class SearchKind { DFS, BFS };

/// Which DFS children survive the threshold test. `KeepAtMost` keeps h <= threshold,
/// `KeepAbove` is the literal h > threshold reading, `Disabled` keeps everything.
enum class PruneDirection { KeepAtMost, KeepAbove, Disabled };

/// Which BFS children are kept: the b lowest heuristic values or the b highest.
enum class SelectDirection { Min, Max };

struct StrategyConfig {
    SearchKind kind = SearchKind::DFS;
    HeuristicKind heuristic = HeuristicKind::Sum;
    int breadth_limit = 0;             // BFS only, 1..5
    std::optional<Number> threshold;   // DFS only; the target when unset
    PruneDirection prune = PruneDirection::KeepAtMost;
    SelectDirection select = SelectDirection::Min;
    GoalRule goal = GoalRule::AnyResult;

    [[nodiscard]] static StrategyConfig dfs(HeuristicKind h);
    [[nodiscard]] static StrategyConfig bfs(int breadth, HeuristicKind h);

    friend bool operator==(const StrategyConfig&, const StrategyConfig&) = default;
};

/// Stable name such as `dfs-sum` or `bfs-3-multiply`.
[[nodiscard]] std::string strategy_name(const StrategyConfig& cfg);
[[nodiscard]] std::optional<StrategyConfig> strategy_from_name(std::string_view name);

/// The 12 dataset strategies: dfs-sum, dfs-multiply, bfs-1-sum, bfs-1-multiply, ...,
/// bfs-5-multiply. Bit i of a difficulty mask refers to element i.
[[nodiscard]] const std::vector<StrategyConfig>& all_strategies();

/// Depth-first stream of search. Each visited state lists all of its surviving
/// children (in ascending heuristic order) before descending into them.
[[nodiscard]] Trajectory dfs_stream(const Problem& problem, const StrategyConfig& cfg,
                                    std::optional<std::size_t> node_budget = std::nullopt);

/// Breadth-first stream of search keeping the b best children of each expansion.
[[nodiscard]] Trajectory bfs_stream(const Problem& problem, const StrategyConfig& cfg,
                                    std::optional<std::size_t> node_budget = std::nullopt);

/// Dispatches on cfg.kind. With a node budget the search stops before exploring
/// more than that many operations and ends with `No Solution Found`.
[[nodiscard]] Trajectory run_strategy(const StrategyConfig& cfg, const Problem& problem,
                                      std::optional<std::size_t> node_budget = std::nullopt);

}  // namespace sos
