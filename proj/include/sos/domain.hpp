#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Countdown as a search problem: states, legal arithmetic, transitions, goal checks.

namespace sos {

using Number = std::int64_t;

inline constexpr std::size_t kDefaultInputCount = 4;
inline constexpr Number kMinTarget = 10;
inline constexpr Number kMaxTarget = 100;

enum class Operator : char { Add = '+', Sub = '-', Mul = '*', Div = '/' };

inline constexpr Operator kOperators[] = {Operator::Add, Operator::Sub, Operator::Mul, Operator::Div};

[[nodiscard]] constexpr char to_char(Operator op) noexcept { return static_cast<char>(op); }
[[nodiscard]] std::optional<Operator> operator_from_char(char c) noexcept;

enum class Split { Train, Val, TestSeenTarget, TestNewTarget };

[[nodiscard]] std::string_view to_string(Split split) noexcept;
[[nodiscard]] std::optional<Split> split_from_string(std::string_view name) noexcept;

/// Goal semantics. `AnyResult` fires as soon as an operation produces the target,
/// `AllUsed` additionally requires that it is the only number left.
enum class GoalRule { AnyResult, AllUsed };

struct Problem {
    Number target = 0;
    std::vector<Number> inputs;
    Split split = Split::Train;

    friend bool operator==(const Problem&, const Problem&) = default;
};

/// Validates the problem invariants (target range, input count, positive inputs).
/// Throws std::invalid_argument naming the violated rule.
void check_problem(const Problem& problem, std::size_t input_count = kDefaultInputCount);

/// Key identifying a problem up to input order, used for deduplication.
[[nodiscard]] std::string problem_key(const Problem& problem);

/// A single written operation `lhs op rhs = result`. Operands are kept in the
/// order they are rendered.
struct ArithmeticOp {
    Number lhs = 0;
    Number rhs = 0;
    Operator op = Operator::Add;
    Number result = 0;

    friend bool operator==(const ArithmeticOp&, const ArithmeticOp&) = default;

    [[nodiscard]] std::string to_string() const;
};

enum class OpError { NonIntegerDivision, NegativeResult, DivisionByZero };

[[nodiscard]] std::string_view to_string(OpError error) noexcept;

/// Either a validated operation or the reason it is illegal.
class OpResult {
public:
    OpResult(ArithmeticOp op) : op_{op} {}  // NOLINT(google-explicit-constructor)
    OpResult(OpError error) : error_{error} {}  // NOLINT(google-explicit-constructor)

    [[nodiscard]] bool ok() const noexcept { return op_.has_value(); }
    explicit operator bool() const noexcept { return ok(); }
    [[nodiscard]] const ArithmeticOp& value() const;
    [[nodiscard]] OpError error() const;

private:
    std::optional<ArithmeticOp> op_;
    std::optional<OpError> error_{};
};

/// Evaluates `a op b` exactly as written. Subtraction must not go negative and
/// division must be exact with a non-zero divisor.
[[nodiscard]] OpResult apply_op(Number a, Number b, Operator op);

/// True when `op.result` is the exact, legal value of `op.lhs op op.rhs`.
[[nodiscard]] bool is_valid(const ArithmeticOp& op);

using NodePath = std::vector<std::uint32_t>;

struct SearchState {
    std::vector<Number> remaining;
    std::vector<ArithmeticOp> history;
    NodePath node{0};

    [[nodiscard]] static SearchState initial(const Problem& problem);

    friend bool operator==(const SearchState&, const SearchState&) = default;
};

/// All legal operations over unordered pairs of `remaining`. Pairs are visited by
/// position (i < j) and operators in the order + - * /. Subtraction and division
/// put the larger operand first; a zero dividend is written `0/x`. Operations that
/// repeat an earlier (operands, operator, result) triple are dropped.
[[nodiscard]] std::vector<ArithmeticOp> enumerate_ops(const SearchState& state);
[[nodiscard]] std::vector<ArithmeticOp> enumerate_ops(const std::vector<Number>& remaining);

class OperandNotAvailable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numbers left after `op`: both operands removed (first occurrences), result appended.
/// Throws OperandNotAvailable if an operand is missing.
[[nodiscard]] std::vector<Number> apply_to_numbers(const std::vector<Number>& remaining, const ArithmeticOp& op);

/// Child state reached by `op`; the node path is extended with `child_index`.
[[nodiscard]] SearchState transition(const SearchState& state, const ArithmeticOp& op, std::uint32_t child_index);

[[nodiscard]] bool is_goal(const SearchState& state, Number target, GoalRule rule = GoalRule::AnyResult);

/// Goal check performed at the moment `op` produced `child`.
[[nodiscard]] bool reaches_goal(const ArithmeticOp& op, const SearchState& child, Number target,
                                GoalRule rule = GoalRule::AnyResult);

/// Sorted multiset of remaining numbers, e.g. "[24,38,44]".
[[nodiscard]] std::string canonical_key(const std::vector<Number>& remaining);
[[nodiscard]] std::string canonical_key(const SearchState& state);

/// Replays `ops` from `inputs`. Returns the final numbers, or nullopt when an op is
/// illegal or uses an operand that is not available.
[[nodiscard]] std::optional<std::vector<Number>> replay(const std::vector<Number>& inputs,
                                                        const std::vector<ArithmeticOp>& ops);

}  // namespace sos
