#include "sos/validator.hpp"

#include "sos/metrics.hpp"

#include <algorithm>
#include <map>

namespace sos {

namespace {

const std::string kRoot = "0";

bool same_multiset(std::vector<Number> a, std::vector<Number> b)
{
    if (a.size() != b.size())
        return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::string path_key(const NodePath& p) { return render_node(p); }
std::string seq_key(std::uint64_t seq) { return "#" + std::to_string(seq); }

// Walks the parsed events keeping the state each line is judged against.
class Checker {
public:
    Checker(const Problem& problem, ValidationReport& report) : problem_{problem}, report_{report}
    {
        nodes_.emplace(kRoot, Node{problem.inputs, problem.inputs, {}});
        context_ = Context{problem.inputs, {}, kRoot};
    }

    void check(const TraceEvent& ev, std::size_t line)
    {
        line_ = line;
        if (goal_seen_) {
            flag(ErrorKind::Other, "event after goal");
            return;
        }
        const auto flagged_before = report_.findings.size();
        std::visit([this](const auto& e) { on(e); }, ev);
        previous_was_explore_ = std::holds_alternative<event::ExploreOp>(ev);
        previous_flagged_ = report_.findings.size() != flagged_before;
        previous_unparsed_ = false;
    }

    // An unparseable line sits between the previous event and the next one.
    void skipped_line() { previous_unparsed_ = true; }

private:
    // A node keeps the numbers the trace claimed and the ones its operation implies;
    // a later state line may repeat either without being flagged again.
    struct Node {
        std::vector<Number> remaining;
        std::vector<Number> expected;
        std::vector<ArithmeticOp> history;
    };
    struct Context {
        std::vector<Number> remaining;
        std::vector<ArithmeticOp> history;
        std::optional<std::string> key;  // nullopt: reached through a broken move
    };

    void flag(ErrorKind kind, std::string detail)
    {
        report_.errors.add(kind);
        report_.findings.push_back({line_, kind, std::move(detail)});
    }

    // Arithmetic category: the operation itself is wrong or not applicable.
    std::optional<std::string> arithmetic_problem(const ArithmeticOp& op) const
    {
        if (!is_valid(op)) {
            auto r = apply_op(op.lhs, op.rhs, op.op);
            return r.ok() ? "wrong result " + op.to_string() : std::string{to_string(r.error())} + " in " + op.to_string();
        }
        try {
            (void)apply_to_numbers(context_.remaining, op);
        } catch (const OperandNotAvailable&) {
            return "operands of " + op.to_string() + " not available";
        }
        return std::nullopt;
    }

    std::vector<Number> expected_child(const ArithmeticOp& op) const
    {
        return apply_to_numbers(context_.remaining, op);
    }

    void on(const event::CurrentState& e)
    {
        std::optional<std::string> key;
        if (!first_state_seen_) {
            key = kRoot;
        } else if (pending_move_) {
            key = *pending_move_;
        } else if (last_generated_) {
            key = *last_generated_;
        } else {
            key = context_.key;
        }
        first_state_seen_ = true;
        pending_move_.reset();
        last_generated_.reset();

        if (e.target != problem_.target) {
            flag(ErrorKind::Other, "current state names target " + std::to_string(e.target));
        } else if (key) {
            const auto& node = nodes_.at(*key);
            if (!same_multiset(e.remaining, node.remaining) && !same_multiset(e.remaining, node.expected))
                flag(ErrorKind::Other, "current state numbers differ from node " + *key);
            else if (e.history != node.history)
                flag(ErrorKind::Other, "current state operations differ from node " + *key);
        }
        context_ = Context{e.remaining, e.history, key};
    }

    void on(const event::ExploreOp& e)
    {
        if (auto why = arithmetic_problem(e.op))
            flag(ErrorKind::Arithmetic, *why);
        else if (!same_multiset(e.resulting, expected_child(e.op)))
            flag(ErrorKind::Other, "resulting numbers do not follow from " + e.op.to_string());
        last_explore_op_ = e.op;
    }

    bool label_extends_context(const NodePath& label) const
    {
        if (!context_.key)
            return true;
        return path_key(NodePath(label.begin(), label.end() - 1)) == *context_.key;
    }

    void add_node(std::string key, const std::vector<Number>& remaining, const ArithmeticOp& op)
    {
        auto history = context_.history;
        history.push_back(op);
        std::vector<Number> expected = remaining;
        if (is_valid(op)) {
            try {
                expected = expected_child(op);
            } catch (const OperandNotAvailable&) {
            }
        }
        nodes_.try_emplace(key, Node{remaining, std::move(expected), std::move(history)});
        last_generated_ = std::move(key);
    }

    void on(const event::GeneratedNode& e)
    {
        const auto key = path_key(e.node);
        if (auto why = arithmetic_problem(e.op))
            flag(ErrorKind::Arithmetic, *why);
        else if (e.target != problem_.target)
            flag(ErrorKind::Other, "generated node names target " + std::to_string(e.target));
        else if (!same_multiset(e.remaining, expected_child(e.op)))
            flag(ErrorKind::Other, "node " + key + " has the wrong numbers");
        else if (e.node.size() < 2)
            flag(ErrorKind::Exploration, "node label " + key + " names the root");
        else if (nodes_.contains(key))
            flag(ErrorKind::Exploration, "node " + key + " generated twice");
        else if (!label_extends_context(e.node))
            flag(ErrorKind::Exploration, "node " + key + " is not a child of the current node");
        add_node(key, e.remaining, e.op);
    }

    void on(const event::GeneratedPathNode& e)
    {
        const auto key = seq_key(e.seq);
        if (auto why = arithmetic_problem(e.op))
            flag(ErrorKind::Arithmetic, *why);
        else if (!same_multiset(e.remaining, expected_child(e.op)))
            flag(ErrorKind::Other, "node " + key + " has the wrong numbers");
        else if (nodes_.contains(key))
            flag(ErrorKind::Exploration, "node " + key + " generated twice");
        add_node(key, e.remaining, e.op);
    }

    void on(const event::MoveToNode& e)
    {
        const auto key = path_key(e.node);
        if (nodes_.contains(key)) {
            pending_move_ = key;
        } else {
            flag(ErrorKind::Exploration, "moving to node " + key + " that was never generated");
            pending_move_ = std::optional<std::string>{};
        }
    }

    void on(const event::GoalReached& e)
    {
        goal_seen_ = true;
        if (e.target != problem_.target || e.value != problem_.target)
            flag(ErrorKind::Other, "goal line does not match the target");
        else if (!previous_unparsed_ && !(previous_was_explore_ && previous_flagged_) &&
                 (!previous_was_explore_ || !last_explore_op_ || last_explore_op_->result != e.value))
            flag(ErrorKind::Other, "goal line does not follow an operation producing the target");
    }

    void on(const event::NoSolution&) {}

    const Problem& problem_;
    ValidationReport& report_;
    std::map<std::string, Node> nodes_;
    Context context_;
    std::size_t line_ = 0;
    bool first_state_seen_ = false;
    bool goal_seen_ = false;
    bool previous_was_explore_ = false;
    bool previous_unparsed_ = false;
    bool previous_flagged_ = false;
    // Set by a move: the named node, or an empty key for a move to an unknown node.
    std::optional<std::optional<std::string>> pending_move_;
    std::optional<std::string> last_generated_;
    std::optional<ArithmeticOp> last_explore_op_;
};

}  // namespace

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::Arithmetic: return "arithmetic";
    case ErrorKind::Formatting: return "formatting";
    case ErrorKind::Exploration: return "exploration";
    case ErrorKind::Other: return "other";
    }
    return "other";
}

std::size_t ErrorCounts::of(ErrorKind kind) const noexcept
{
    switch (kind) {
    case ErrorKind::Arithmetic: return arithmetic;
    case ErrorKind::Formatting: return formatting;
    case ErrorKind::Exploration: return exploration;
    case ErrorKind::Other: return other;
    }
    return 0;
}

void ErrorCounts::add(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::Arithmetic: ++arithmetic; break;
    case ErrorKind::Formatting: ++formatting; break;
    case ErrorKind::Exploration: ++exploration; break;
    case ErrorKind::Other: ++other; break;
    }
}

ValidationReport validate(std::string_view text, const Problem& problem, GoalRule rule)
{
    ValidationReport report;
    auto parsed = parse(text, ParseMode::Lenient);

    Checker checker{problem, report};
    std::size_t next_violation = 0;
    auto flush_violations_before = [&](std::size_t line) {
        while (next_violation < parsed.violations.size() && parsed.violations[next_violation].line < line) {
            const auto& v = parsed.violations[next_violation++];
            report.errors.add(ErrorKind::Formatting);
            report.findings.push_back({v.line, ErrorKind::Formatting, v.reason});
            checker.skipped_line();
        }
    };
    for (std::size_t i = 0; i < parsed.trajectory.events.size(); ++i) {
        flush_violations_before(parsed.lines[i]);
        checker.check(parsed.trajectory.events[i], parsed.lines[i]);
    }
    flush_violations_before(static_cast<std::size_t>(-1));

    auto& traj = parsed.trajectory;
    traj.problem = problem;
    report.states_visited = extract_states(traj);
    report.states_explored = states_explored(traj);

    auto path = extract_solution_path(traj);
    if (path.found()) {
        const auto* goal = [&]() -> const event::GoalReached* {
            for (const auto& ev : traj.events) {
                if (const auto* g = std::get_if<event::GoalReached>(&ev))
                    return g;
            }
            return nullptr;
        }();
        const auto final_numbers = replay(problem.inputs, path.ops);
        const bool reaches = final_numbers && !path.ops.empty() && path.ops.back().result == problem.target &&
                             (rule == GoalRule::AnyResult ||
                              (final_numbers->size() == 1 && final_numbers->front() == problem.target));
        report.correct = reaches && goal && goal->value == problem.target && goal->target == problem.target;
        if (report.correct)
            report.solution_path = std::move(path.ops);
    }
    return report;
}

BatchSummary batch_report(std::span<const ValidationReport> reports)
{
    if (reports.empty())
        throw EmptyBatch{};
    BatchSummary s;
    s.trajectories = reports.size();
    std::vector<double> arithmetic, formatting, exploration, other, explored;
    for (const auto& r : reports) {
        if (r.correct) {
            ++s.correct;
            explored.push_back(static_cast<double>(r.states_explored));
        }
        arithmetic.push_back(static_cast<double>(r.errors.arithmetic));
        formatting.push_back(static_cast<double>(r.errors.formatting));
        exploration.push_back(static_cast<double>(r.errors.exploration));
        other.push_back(static_cast<double>(r.errors.other));
    }
    s.accuracy = wilson_interval(s.correct, s.trajectories);
    s.arithmetic = mean_interval(arithmetic);
    s.formatting = mean_interval(formatting);
    s.exploration = mean_interval(exploration);
    s.other = mean_interval(other);
    if (!explored.empty())
        s.states_explored = mean_interval(explored);
    return s;
}

}  // namespace sos
