#include "sos/oracle.hpp"

namespace sos {

namespace {

struct Search {
    Number target;
    GoalRule rule;
    std::vector<ArithmeticOp> path;
    SolveResult result;

    void run(const SearchState& state)
    {
        const auto ops = enumerate_ops(state);
        for (std::uint32_t i = 0; i < ops.size(); ++i) {
            auto child = transition(state, ops[i], i);
            path.push_back(ops[i]);
            if (reaches_goal(ops[i], child, target, rule)) {
                ++result.solution_count;
                if (!result.one_path || path.size() < result.one_path->size())
                    result.one_path = path;
            } else {
                run(child);
            }
            path.pop_back();
        }
    }
};

}  // namespace

SolveResult solve_exhaustive(const Problem& problem, GoalRule rule)
{
    Search search{problem.target, rule, {}, {}};
    search.run(SearchState::initial(problem));
    search.result.solvable = search.result.solution_count > 0;
    return search.result;
}

Trajectory optimal_path_trajectory(const Problem& problem, const std::vector<ArithmeticOp>& path)
{
    Trajectory t;
    t.problem = problem;
    t.format = TraceFormat::OptimalPath;
    SearchState state = SearchState::initial(problem);
    t.events.push_back(event::CurrentState{problem.target, state.remaining, state.history});
    for (std::size_t k = 0; k < path.size(); ++k) {
        state = transition(state, path[k], 0);
        t.events.push_back(event::ExploreOp{path[k], state.remaining});
        if (k + 1 == path.size()) {
            t.events.push_back(event::GoalReached{path[k].result, problem.target});
            break;
        }
        t.events.push_back(event::GeneratedPathNode{k + 2, state.remaining, path[k]});
        t.events.push_back(event::CurrentState{problem.target, state.remaining, state.history});
    }
    return t;
}

Trajectory optimal_trajectory(const Problem& problem, GoalRule rule)
{
    auto solved = solve_exhaustive(problem, rule);
    if (solved.one_path)
        return optimal_path_trajectory(problem, *solved.one_path);
    Trajectory t;
    t.problem = problem;
    t.format = TraceFormat::OptimalPath;
    t.events.push_back(event::CurrentState{problem.target, problem.inputs, {}});
    t.events.push_back(event::NoSolution{});
    return t;
}

DifficultyMask classify_difficulty(const Problem& problem)
{
    DifficultyMask mask = 0;
    const auto& strategies = all_strategies();
    for (std::size_t i = 0; i < strategies.size(); ++i) {
        if (run_strategy(strategies[i], problem).correct())
            mask |= static_cast<DifficultyMask>(1u << i);
    }
    return mask;
}

bool is_difficult(const Problem& problem)
{
    return classify_difficulty(problem) == 0 && solve_exhaustive(problem).solvable;
}

}  // namespace sos
