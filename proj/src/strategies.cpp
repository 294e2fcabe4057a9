#include "sos/strategies.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace sos {

namespace {

Number sum_of(const std::vector<Number>& xs)
{
    return std::accumulate(xs.begin(), xs.end(), Number{0});
}

Number abs_diff(Number a, Number b)
{
    return a > b ? a - b : b - a;
}

struct Child {
    ArithmeticOp op;
    std::vector<Number> remaining;
    Number score = 0;
};

std::vector<Child> expand(const SearchState& state, HeuristicKind kind, Number target)
{
    std::vector<Child> children;
    for (const auto& op : enumerate_ops(state)) {
        auto remaining = apply_to_numbers(state.remaining, op);
        const Number score = evaluate(kind, remaining, target);
        children.push_back({op, std::move(remaining), score});
    }
    return children;
}

enum class Outcome { NotFound, Found, OutOfBudget };

// Owns the trajectory under construction and enforces the exploration budget.
class StreamWriter {
public:
    StreamWriter(const Problem& problem, std::optional<std::size_t> budget) : budget_{budget}
    {
        trajectory_.problem = problem;
        trajectory_.format = TraceFormat::Search;
    }

    void current(const SearchState& s)
    {
        emit(event::CurrentState{trajectory_.problem.target, s.remaining, s.history});
    }

    [[nodiscard]] bool may_explore()
    {
        if (budget_ && explored_ >= *budget_)
            return false;
        ++explored_;
        return true;
    }

    void explore(const ArithmeticOp& op, const std::vector<Number>& resulting)
    {
        emit(event::ExploreOp{op, resulting});
    }

    void generated(const SearchState& child)
    {
        emit(event::GeneratedNode{child.node, trajectory_.problem.target, child.remaining, child.history.back()});
    }

    void move_to(const NodePath& node) { emit(event::MoveToNode{node}); }

    void goal() { emit(event::GoalReached{trajectory_.problem.target, trajectory_.problem.target}); }

    Trajectory finish(Outcome outcome) &&
    {
        if (outcome != Outcome::Found)
            emit(event::NoSolution{});
        return std::move(trajectory_);
    }

private:
    void emit(TraceEvent ev) { trajectory_.events.push_back(std::move(ev)); }

    Trajectory trajectory_;
    std::optional<std::size_t> budget_;
    std::size_t explored_ = 0;
};

// Emits explore/generate lines for `children` in order. Returns Found when one of
// them reaches the goal, OutOfBudget when the budget runs out, else NotFound and
// the generated child states in `out`.
Outcome emit_children(StreamWriter& w, const SearchState& parent, const std::vector<Child>& children,
                      const StrategyConfig& cfg, Number target, std::vector<SearchState>& out)
{
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (!w.may_explore())
            return Outcome::OutOfBudget;
        auto child = transition(parent, children[i].op, static_cast<std::uint32_t>(i));
        w.explore(children[i].op, child.remaining);
        if (reaches_goal(children[i].op, child, target, cfg.goal)) {
            w.goal();
            return Outcome::Found;
        }
        w.generated(child);
        out.push_back(std::move(child));
    }
    return Outcome::NotFound;
}

bool survives(const StrategyConfig& cfg, Number score, Number threshold)
{
    switch (cfg.prune) {
    case PruneDirection::KeepAtMost: return score <= threshold;
    case PruneDirection::KeepAbove: return score > threshold;
    case PruneDirection::Disabled: return true;
    }
    return true;
}

Outcome dfs_visit(StreamWriter& w, const SearchState& state, const StrategyConfig& cfg, Number target)
{
    w.current(state);
    const Number threshold = cfg.threshold.value_or(target);

    auto children = expand(state, cfg.heuristic, target);
    std::erase_if(children, [&](const Child& c) { return !survives(cfg, c.score, threshold); });
    std::stable_sort(children.begin(), children.end(),
                     [](const Child& a, const Child& b) { return a.score < b.score; });

    std::vector<SearchState> generated;
    if (auto o = emit_children(w, state, children, cfg, target, generated); o != Outcome::NotFound)
        return o;

    for (const auto& child : generated) {
        if (child.remaining.size() < 2)
            continue;
        w.move_to(child.node);
        if (auto o = dfs_visit(w, child, cfg, target); o != Outcome::NotFound)
            return o;
    }
    return Outcome::NotFound;
}

}  // namespace

Number h_sum(const std::vector<Number>& remaining, Number target)
{
    return abs_diff(target, sum_of(remaining));
}

Number h_multiply(const std::vector<Number>& remaining, Number target)
{
    if (target < 1)
        throw std::invalid_argument("h_multiply needs a positive target");
    const Number total = sum_of(remaining);
    Number best = abs_diff(target, total);
    for (Number f = 1; f * f <= target; ++f) {
        if (target % f != 0)
            continue;
        best = std::min({best, abs_diff(f, total), abs_diff(target / f, total)});
    }
    return best;
}

Number evaluate(HeuristicKind kind, const std::vector<Number>& remaining, Number target)
{
    return kind == HeuristicKind::Sum ? h_sum(remaining, target) : h_multiply(remaining, target);
}

StrategyConfig StrategyConfig::dfs(HeuristicKind h)
{
    StrategyConfig cfg;
    cfg.kind = SearchKind::DFS;
    cfg.heuristic = h;
    return cfg;
}

StrategyConfig StrategyConfig::bfs(int breadth, HeuristicKind h)
{
    StrategyConfig cfg;
    cfg.kind = SearchKind::BFS;
    cfg.heuristic = h;
    cfg.breadth_limit = breadth;
    return cfg;
}

std::string strategy_name(const StrategyConfig& cfg)
{
    const std::string h = cfg.heuristic == HeuristicKind::Sum ? "sum" : "multiply";
    if (cfg.kind == SearchKind::DFS)
        return "dfs-" + h;
    return "bfs-" + std::to_string(cfg.breadth_limit) + "-" + h;
}

std::optional<StrategyConfig> strategy_from_name(std::string_view name)
{
    for (const auto& cfg : all_strategies()) {
        if (strategy_name(cfg) == name)
            return cfg;
    }
    return std::nullopt;
}

const std::vector<StrategyConfig>& all_strategies()
{
    static const std::vector<StrategyConfig> strategies = [] {
        std::vector<StrategyConfig> v;
        v.push_back(StrategyConfig::dfs(HeuristicKind::Sum));
        v.push_back(StrategyConfig::dfs(HeuristicKind::Multiply));
        for (int b = 1; b <= 5; ++b) {
            v.push_back(StrategyConfig::bfs(b, HeuristicKind::Sum));
            v.push_back(StrategyConfig::bfs(b, HeuristicKind::Multiply));
        }
        return v;
    }();
    return strategies;
}

Trajectory dfs_stream(const Problem& problem, const StrategyConfig& cfg, std::optional<std::size_t> node_budget)
{
    if (cfg.kind != SearchKind::DFS)
        throw std::invalid_argument("dfs_stream needs a DFS config");
    StreamWriter w{problem, node_budget};
    const auto outcome = dfs_visit(w, SearchState::initial(problem), cfg, problem.target);
    return std::move(w).finish(outcome);
}

Trajectory bfs_stream(const Problem& problem, const StrategyConfig& cfg, std::optional<std::size_t> node_budget)
{
    if (cfg.kind != SearchKind::BFS || cfg.breadth_limit < 1 || cfg.breadth_limit > 5)
        throw std::invalid_argument("bfs_stream needs a BFS config with breadth limit in [1,5]");
    StreamWriter w{problem, node_budget};
    const Number target = problem.target;
    const auto keep = static_cast<std::size_t>(cfg.breadth_limit);

    std::deque<SearchState> frontier{SearchState::initial(problem)};
    bool root = true;
    while (!frontier.empty()) {
        SearchState state = std::move(frontier.front());
        frontier.pop_front();
        if (!root)
            w.move_to(state.node);
        root = false;
        w.current(state);

        auto children = expand(state, cfg.heuristic, target);
        if (cfg.select == SelectDirection::Min)
            std::stable_sort(children.begin(), children.end(),
                             [](const Child& a, const Child& b) { return a.score < b.score; });
        else
            std::stable_sort(children.begin(), children.end(),
                             [](const Child& a, const Child& b) { return a.score > b.score; });
        if (children.size() > keep)
            children.resize(keep);

        std::vector<SearchState> generated;
        if (auto o = emit_children(w, state, children, cfg, target, generated); o != Outcome::NotFound)
            return std::move(w).finish(o);
        for (auto& child : generated) {
            if (child.remaining.size() >= 2)
                frontier.push_back(std::move(child));
        }
    }
    return std::move(w).finish(Outcome::NotFound);
}

Trajectory run_strategy(const StrategyConfig& cfg, const Problem& problem, std::optional<std::size_t> node_budget)
{
    return cfg.kind == SearchKind::DFS ? dfs_stream(problem, cfg, node_budget) : bfs_stream(problem, cfg, node_budget);
}

}  // namespace sos
