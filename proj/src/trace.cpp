#include "sos/trace.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace sos {

namespace {

constexpr std::string_view kCurrentState = "Current State: ";
constexpr std::string_view kExploring = "Exploring Operation: ";
constexpr std::string_view kGenerated = "Generated Node #";
constexpr std::string_view kMoving = "Moving to Node #";
constexpr std::string_view kGoalSuffix = " equal: Goal Reached";
constexpr std::string_view kNoSolution = "No Solution Found";

constexpr std::size_t kMaxDigits = 18;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string render_history(const std::vector<ArithmeticOp>& history)
{
    std::string s = "[";
    for (std::size_t i = 0; i < history.size(); ++i) {
        if (i)
            s += ", ";
        s += '\'';
        s += history[i].to_string();
        s += '\'';
    }
    s += ']';
    return s;
}

// Recursive-descent reader over a single line. Every accessor either consumes
// input and succeeds or leaves a reason and fails.
class LineReader {
public:
    explicit LineReader(std::string_view line) : rest_{line} {}

    bool literal(std::string_view text)
    {
        if (rest_.substr(0, text.size()) != text)
            return fail("expected '" + std::string{text} + "'");
        rest_.remove_prefix(text.size());
        return true;
    }

    bool peek(std::string_view text) const { return rest_.substr(0, text.size()) == text; }

    bool number(Number& out)
    {
        std::size_t len = 0;
        while (len < rest_.size() && rest_[len] >= '0' && rest_[len] <= '9')
            ++len;
        if (len == 0)
            return fail("expected a number");
        if (len > kMaxDigits)
            return fail("number too long");
        if (len > 1 && rest_[0] == '0')
            return fail("leading zero");
        std::from_chars(rest_.data(), rest_.data() + len, out);
        rest_.remove_prefix(len);
        return true;
    }

    bool operation(ArithmeticOp& op)
    {
        if (!number(op.lhs))
            return false;
        if (rest_.empty())
            return fail("expected an operator");
        auto parsed = operator_from_char(rest_.front());
        if (!parsed)
            return fail(std::string{"illegal operator '"} + rest_.front() + "'");
        op.op = *parsed;
        rest_.remove_prefix(1);
        return number(op.rhs) && literal("=") && number(op.result);
    }

    // "[a, b, c]"
    bool numbers(std::vector<Number>& out)
    {
        if (!literal("["))
            return false;
        if (peek("]"))
            return literal("]");
        for (;;) {
            Number n = 0;
            if (!number(n))
                return false;
            out.push_back(n);
            if (peek("]"))
                return literal("]");
            if (!literal(", "))
                return false;
        }
    }

    // "['a+b=c', 'd-e=f']"
    bool history(std::vector<ArithmeticOp>& out)
    {
        if (!literal("["))
            return false;
        if (peek("]"))
            return literal("]");
        for (;;) {
            ArithmeticOp op;
            if (!literal("'") || !operation(op) || !literal("'"))
                return false;
            out.push_back(op);
            if (peek("]"))
                return literal("]");
            if (!literal(", "))
                return false;
        }
    }

    // "0,1,4"
    bool node_path(NodePath& out)
    {
        for (;;) {
            Number n = 0;
            if (!number(n))
                return false;
            if (n > static_cast<Number>(UINT32_MAX))
                return fail("node index too large");
            out.push_back(static_cast<std::uint32_t>(n));
            if (!peek(","))
                return true;
            literal(",");
        }
    }

    bool end()
    {
        if (!rest_.empty())
            return fail("unexpected trailing text '" + std::string{rest_} + "'");
        return true;
    }

    [[nodiscard]] const std::string& reason() const { return reason_; }

private:
    bool fail(std::string reason)
    {
        if (reason_.empty())
            reason_ = std::move(reason);
        return false;
    }

    std::string_view rest_;
    std::string reason_;
};

std::optional<TraceEvent> parse_event(LineReader& in, std::string_view line)
{
    if (line.starts_with(kCurrentState)) {
        event::CurrentState e;
        if (in.literal(kCurrentState) && in.number(e.target) && in.literal(":") && in.numbers(e.remaining) &&
            in.literal(", Operations: ") && in.history(e.history) && in.end())
            return e;
        return std::nullopt;
    }
    if (line.starts_with(kExploring)) {
        event::ExploreOp e;
        if (in.literal(kExploring) && in.operation(e.op) && in.literal(", Resulting Numbers: ") &&
            in.numbers(e.resulting) && in.end())
            return e;
        return std::nullopt;
    }
    if (line.starts_with(kGenerated)) {
        in.literal(kGenerated);
        NodePath path;
        if (!in.node_path(path) || !in.literal(": "))
            return std::nullopt;
        if (in.peek("[")) {
            if (path.size() != 1)
                return std::nullopt;
            event::GeneratedPathNode e;
            e.seq = path.front();
            if (in.numbers(e.remaining) && in.literal(" from Operation: ") && in.operation(e.op) && in.end())
                return e;
            return std::nullopt;
        }
        event::GeneratedNode e;
        e.node = std::move(path);
        if (in.number(e.target) && in.literal(":") && in.numbers(e.remaining) && in.literal(" Operation: ") &&
            in.operation(e.op) && in.end())
            return e;
        return std::nullopt;
    }
    if (line.starts_with(kMoving)) {
        event::MoveToNode e;
        if (in.literal(kMoving) && in.node_path(e.node) && in.end())
            return e;
        return std::nullopt;
    }
    if (line == kNoSolution)
        return event::NoSolution{};
    if (line.ends_with(kGoalSuffix)) {
        event::GoalReached e;
        if (in.number(e.value) && in.literal(",") && in.number(e.target) && in.literal(kGoalSuffix) && in.end())
            return e;
        return std::nullopt;
    }
    in.literal("<event>");
    return std::nullopt;
}

std::string_view trim(std::string_view s)
{
    constexpr std::string_view ws = " \t\r\n\v\f";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

std::string node_key(const NodePath& path) { return render_node(path); }
std::string node_key(std::uint64_t seq) { return "#" + std::to_string(seq); }

const std::string kRootKey = "0";
const std::string kBrokenKey = "?";

}  // namespace

bool Trajectory::correct() const
{
    if (events.empty())
        return false;
    const auto* goal = std::get_if<event::GoalReached>(&events.back());
    return goal && goal->value == problem.target && goal->target == problem.target;
}

std::string render_numbers(const std::vector<Number>& numbers)
{
    std::string s = "[";
    for (std::size_t i = 0; i < numbers.size(); ++i) {
        if (i)
            s += ", ";
        s += std::to_string(numbers[i]);
    }
    s += ']';
    return s;
}

std::string render_node(const NodePath& node)
{
    std::string s;
    for (std::size_t i = 0; i < node.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(node[i]);
    }
    return s;
}

std::string serialize(const TraceEvent& ev)
{
    return std::visit(
        overloaded{
            [](const event::CurrentState& e) {
                return std::string{kCurrentState} + std::to_string(e.target) + ":" + render_numbers(e.remaining) +
                       ", Operations: " + render_history(e.history);
            },
            [](const event::ExploreOp& e) {
                return std::string{kExploring} + e.op.to_string() + ", Resulting Numbers: " +
                       render_numbers(e.resulting);
            },
            [](const event::GeneratedNode& e) {
                return std::string{kGenerated} + render_node(e.node) + ": " + std::to_string(e.target) + ":" +
                       render_numbers(e.remaining) + " Operation: " + e.op.to_string();
            },
            [](const event::GeneratedPathNode& e) {
                return std::string{kGenerated} + std::to_string(e.seq) + ": " + render_numbers(e.remaining) +
                       " from Operation: " + e.op.to_string();
            },
            [](const event::MoveToNode& e) { return std::string{kMoving} + render_node(e.node); },
            [](const event::GoalReached& e) {
                return std::to_string(e.value) + "," + std::to_string(e.target) + std::string{kGoalSuffix};
            },
            [](const event::NoSolution&) { return std::string{kNoSolution}; },
        },
        ev);
}

std::string serialize(const Trajectory& trajectory)
{
    std::string out;
    for (std::size_t i = 0; i < trajectory.events.size(); ++i) {
        if (i)
            out += '\n';
        out += serialize(trajectory.events[i]);
    }
    return out;
}

SyntaxError::SyntaxError(std::size_t line, std::string reason)
    : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_{line}, reason_{std::move(reason)}
{
}

std::optional<TraceEvent> parse_line(std::string_view line, std::string* reason)
{
    LineReader in{line};
    auto ev = parse_event(in, line);
    if (!ev && reason)
        *reason = in.reason().empty() ? "unrecognized line" : in.reason();
    return ev;
}

ParseResult parse(std::string_view text, ParseMode mode)
{
    ParseResult result;
    if (text.ends_with('\n'))
        text.remove_suffix(1);
    if (text.empty())
        return result;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (mode == ParseMode::Lenient) {
            line = trim(line);
            if (line.empty())
                continue;
        }
        std::string reason;
        auto ev = parse_line(line, &reason);
        if (!ev) {
            if (mode == ParseMode::Strict)
                throw SyntaxError(line_no, reason);
            result.violations.push_back({line_no, reason, std::string{line}});
            continue;
        }
        result.trajectory.events.push_back(std::move(*ev));
        result.lines.push_back(line_no);
    }

    auto& traj = result.trajectory;
    if (!traj.events.empty()) {
        if (const auto* first = std::get_if<event::CurrentState>(&traj.events.front())) {
            traj.problem.target = first->target;
            traj.problem.inputs = first->remaining;
        }
    }
    const bool path_format = std::any_of(traj.events.begin(), traj.events.end(), [](const TraceEvent& e) {
        return std::holds_alternative<event::GeneratedPathNode>(e);
    });
    traj.format = path_format ? TraceFormat::OptimalPath : TraceFormat::Search;
    return result;
}

std::vector<std::string> extract_states(const Trajectory& trajectory)
{
    std::vector<std::string> keys;
    for (const auto& ev : trajectory.events) {
        if (const auto* cs = std::get_if<event::CurrentState>(&ev))
            keys.push_back(canonical_key(cs->remaining));
        else if (const auto* ex = std::get_if<event::ExploreOp>(&ev))
            keys.push_back(canonical_key(ex->resulting));
        else if (const auto* gn = std::get_if<event::GeneratedNode>(&ev))
            keys.push_back(canonical_key(gn->remaining));
        else if (const auto* gp = std::get_if<event::GeneratedPathNode>(&ev))
            keys.push_back(canonical_key(gp->remaining));
    }
    return keys;
}

SolutionPath extract_solution_path(const Trajectory& trajectory)
{
    struct NodeInfo {
        std::string parent;
        ArithmeticOp op;
    };
    std::map<std::string, NodeInfo> nodes;
    std::optional<std::string> current;
    std::optional<std::string> pending_move;
    std::optional<std::string> last_generated;
    const event::ExploreOp* last_explore = nullptr;
    std::string explore_parent;

    auto add_node = [&](std::string key, const ArithmeticOp& op) {
        nodes.try_emplace(key, NodeInfo{current.value_or(kBrokenKey), op});
        last_generated = std::move(key);
    };

    for (const auto& ev : trajectory.events) {
        const event::ExploreOp* explore_before = last_explore;
        last_explore = nullptr;

        if (std::holds_alternative<event::CurrentState>(ev)) {
            if (!current)
                current = kRootKey;
            else if (pending_move)
                current = *pending_move;
            else if (last_generated)
                current = *last_generated;
            pending_move.reset();
            last_generated.reset();
        } else if (const auto* ex = std::get_if<event::ExploreOp>(&ev)) {
            last_explore = ex;
            explore_parent = current.value_or(kBrokenKey);
        } else if (const auto* gn = std::get_if<event::GeneratedNode>(&ev)) {
            add_node(node_key(gn->node), gn->op);
        } else if (const auto* gp = std::get_if<event::GeneratedPathNode>(&ev)) {
            add_node(node_key(gp->seq), gp->op);
        } else if (const auto* mv = std::get_if<event::MoveToNode>(&ev)) {
            const auto key = node_key(mv->node);
            pending_move = (key == kRootKey || nodes.contains(key)) ? key : kBrokenKey;
        } else if (std::holds_alternative<event::GoalReached>(ev)) {
            if (!explore_before)
                return {SolutionPath::Status::BrokenAncestry, {}};
            std::vector<ArithmeticOp> ops{explore_before->op};
            std::string node = explore_parent;
            while (node != kRootKey) {
                auto it = nodes.find(node);
                if (it == nodes.end())
                    return {SolutionPath::Status::BrokenAncestry, {}};
                ops.push_back(it->second.op);
                node = it->second.parent;
            }
            std::reverse(ops.begin(), ops.end());
            return {SolutionPath::Status::Found, std::move(ops)};
        }
    }
    return {SolutionPath::Status::NoGoal, {}};
}

}  // namespace sos
