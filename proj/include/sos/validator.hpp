#pragma once

#include "sos/domain.hpp"
#include "sos/stats.hpp"
#include "sos/trace.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sos {

enum class ErrorKind { Arithmetic, Formatting, Exploration, Other };

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

struct ErrorCounts {
    std::size_t arithmetic = 0;
    std::size_t formatting = 0;
    std::size_t exploration = 0;
    std::size_t other = 0;

    [[nodiscard]] std::size_t total() const noexcept { return arithmetic + formatting + exploration + other; }
    [[nodiscard]] std::size_t of(ErrorKind kind) const noexcept;
    void add(ErrorKind kind) noexcept;

    friend bool operator==(const ErrorCounts&, const ErrorCounts&) = default;
};

struct Finding {
    std::size_t line = 0;
    ErrorKind kind = ErrorKind::Other;
    std::string detail;
};

struct ValidationReport {
    bool correct = false;
    ErrorCounts errors;
    std::vector<std::string> states_visited;
    std::optional<std::vector<ArithmeticOp>> solution_path;
    std::size_t states_explored = 0;
    /// One entry per offending line, in line order.
    std::vector<Finding> findings;
};

/// Checks an arbitrary trace against `problem`. Every line lands in at most one
/// category, with precedence formatting > arithmetic > other > exploration:
///   formatting   the line does not parse
///   arithmetic   an operation is wrong, illegal, or uses numbers the state lacks
///   other        a state's numbers disagree with its parent and operation
///   exploration  a move or node label refers to a node that was never generated
/// The trace is correct when it reaches a goal line whose ancestry replays from the
/// inputs to the target using legal operations. Never throws.
[[nodiscard]] ValidationReport validate(std::string_view text, const Problem& problem,
                                        GoalRule rule = GoalRule::AnyResult);

class EmptyBatch : public std::invalid_argument {
public:
    EmptyBatch() : std::invalid_argument("batch_report needs at least one report") {}
};

struct BatchSummary {
    std::size_t trajectories = 0;
    std::size_t correct = 0;
    Interval accuracy;  // Wilson
    Interval arithmetic;
    Interval formatting;
    Interval exploration;
    Interval other;
    /// Over correct trajectories only; absent when none is correct.
    std::optional<Interval> states_explored;
};

[[nodiscard]] BatchSummary batch_report(std::span<const ValidationReport> reports);

}  // namespace sos
