#pragma once

#include "sos/domain.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

// The stream-of-search text format. One event per line:
//
//   Current State: 18:[74, 24, 36, 44], Operations: []
//   Exploring Operation: 74-44=30, Resulting Numbers: [24, 36, 30]
//   Generated Node #0,0: 18:[24, 36, 30] Operation: 74-44=30      (search trace)
//   Generated Node #2: [36, 44, 98] from Operation: 74+24=98      (optimal-path trace)
//   Moving to Node #0,0
//   18,18 equal: Goal Reached
//   No Solution Found

namespace sos {

namespace event {

struct CurrentState {
    Number target = 0;
    std::vector<Number> remaining;
    std::vector<ArithmeticOp> history;
    friend bool operator==(const CurrentState&, const CurrentState&) = default;
};

struct ExploreOp {
    ArithmeticOp op;
    std::vector<Number> resulting;
    friend bool operator==(const ExploreOp&, const ExploreOp&) = default;
};

/// Search-trace node, labelled by its path from the root (`#0,1,4`).
struct GeneratedNode {
    NodePath node;
    Number target = 0;
    std::vector<Number> remaining;
    ArithmeticOp op;
    friend bool operator==(const GeneratedNode&, const GeneratedNode&) = default;
};

/// Optimal-path node, labelled by a sequence number (`#2`).
struct GeneratedPathNode {
    std::uint64_t seq = 0;
    std::vector<Number> remaining;
    ArithmeticOp op;
    friend bool operator==(const GeneratedPathNode&, const GeneratedPathNode&) = default;
};

struct MoveToNode {
    NodePath node;
    friend bool operator==(const MoveToNode&, const MoveToNode&) = default;
};

struct GoalReached {
    Number value = 0;
    Number target = 0;
    friend bool operator==(const GoalReached&, const GoalReached&) = default;
};

struct NoSolution {
    friend bool operator==(const NoSolution&, const NoSolution&) = default;
};

}  // namespace event

using TraceEvent = std::variant<event::CurrentState, event::ExploreOp, event::GeneratedNode,
                                event::GeneratedPathNode, event::MoveToNode, event::GoalReached,
                                event::NoSolution>;

enum class TraceFormat { Search, OptimalPath };

struct Trajectory {
    Problem problem;
    std::vector<TraceEvent> events;
    TraceFormat format = TraceFormat::Search;

    /// Last event is a GoalReached for the problem's target.
    [[nodiscard]] bool correct() const;

    friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

[[nodiscard]] std::string serialize(const TraceEvent& event);

/// Events joined by '\n', no trailing newline.
[[nodiscard]] std::string serialize(const Trajectory& trajectory);

enum class ParseMode { Strict, Lenient };

struct FormatViolation {
    std::size_t line = 0;  // 1-based
    std::string reason;
    std::string text;
};

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t line, std::string reason);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

struct ParseResult {
    Trajectory trajectory;
    std::vector<FormatViolation> violations;
    /// 1-based source line of each parsed event.
    std::vector<std::size_t> lines;
};

/// Parses one line; returns nullopt and fills `reason` on a grammar violation.
[[nodiscard]] std::optional<TraceEvent> parse_line(std::string_view line, std::string* reason = nullptr);

/// Strict mode throws SyntaxError at the first bad line (blank lines included).
/// Lenient mode ignores blank lines and trailing whitespace, records every other
/// bad line as a FormatViolation, and never throws.
/// The problem is taken from the leading CurrentState when there is one.
/// Format is OptimalPath only when a path-node line is present; a one-step or
/// unsolved optimal-path trace reads back as Search.
[[nodiscard]] ParseResult parse(std::string_view text, ParseMode mode = ParseMode::Strict);

/// Canonical keys of every state named in the trace, in order of appearance:
/// current states, resulting numbers of explored operations, and generated nodes.
[[nodiscard]] std::vector<std::string> extract_states(const Trajectory& trajectory);

struct SolutionPath {
    enum class Status { Found, NoGoal, BrokenAncestry };
    Status status = Status::NoGoal;
    std::vector<ArithmeticOp> ops;

    [[nodiscard]] bool found() const noexcept { return status == Status::Found; }
};

/// Recovers the operations from the root to the goal by walking node ancestry
/// back from the GoalReached event.
[[nodiscard]] SolutionPath extract_solution_path(const Trajectory& trajectory);

/// Render helpers shared with tests and tools.
[[nodiscard]] std::string render_numbers(const std::vector<Number>& numbers);
[[nodiscard]] std::string render_node(const NodePath& node);

}  // namespace sos
