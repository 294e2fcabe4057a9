#include "sos/domain.hpp"

#include <algorithm>
#include <sstream>

namespace sos {

std::optional<Operator> operator_from_char(char c) noexcept
{
    switch (c) {
    case '+': return Operator::Add;
    case '-': return Operator::Sub;
    case '*': return Operator::Mul;
    case '/': return Operator::Div;
    default: return std::nullopt;
    }
}

std::string_view to_string(Split split) noexcept
{
    switch (split) {
    case Split::Train: return "train";
    case Split::Val: return "val";
    case Split::TestSeenTarget: return "test_seen_target";
    case Split::TestNewTarget: return "test_new_target";
    }
    return "train";
}

std::optional<Split> split_from_string(std::string_view name) noexcept
{
    for (auto s : {Split::Train, Split::Val, Split::TestSeenTarget, Split::TestNewTarget}) {
        if (to_string(s) == name)
            return s;
    }
    return std::nullopt;
}

void check_problem(const Problem& problem, std::size_t input_count)
{
    if (problem.target < kMinTarget || problem.target > kMaxTarget)
        throw std::invalid_argument("target " + std::to_string(problem.target) + " outside [10,100]");
    if (problem.inputs.size() != input_count)
        throw std::invalid_argument("expected " + std::to_string(input_count) + " inputs, got " +
                                    std::to_string(problem.inputs.size()));
    for (auto n : problem.inputs) {
        if (n < 1)
            throw std::invalid_argument("input " + std::to_string(n) + " is not positive");
    }
}

std::string problem_key(const Problem& problem)
{
    return std::to_string(problem.target) + ":" + canonical_key(problem.inputs);
}

std::string ArithmeticOp::to_string() const
{
    std::string s = std::to_string(lhs);
    s += to_char(op);
    s += std::to_string(rhs);
    s += '=';
    s += std::to_string(result);
    return s;
}

std::string_view to_string(OpError error) noexcept
{
    switch (error) {
    case OpError::NonIntegerDivision: return "non-integer division";
    case OpError::NegativeResult: return "negative result";
    case OpError::DivisionByZero: return "division by zero";
    }
    return "invalid operation";
}

const ArithmeticOp& OpResult::value() const
{
    if (!op_)
        throw std::logic_error("OpResult holds an error: " + std::string{to_string(*error_)});
    return *op_;
}

OpError OpResult::error() const
{
    if (!error_)
        throw std::logic_error("OpResult holds a value");
    return *error_;
}

OpResult apply_op(Number a, Number b, Operator op)
{
    switch (op) {
    case Operator::Add: return ArithmeticOp{a, b, op, a + b};
    case Operator::Sub:
        if (a < b)
            return OpError::NegativeResult;
        return ArithmeticOp{a, b, op, a - b};
    case Operator::Mul: return ArithmeticOp{a, b, op, a * b};
    case Operator::Div:
        if (b == 0)
            return OpError::DivisionByZero;
        if (a % b != 0)
            return OpError::NonIntegerDivision;
        return ArithmeticOp{a, b, op, a / b};
    }
    return OpError::NonIntegerDivision;
}

bool is_valid(const ArithmeticOp& op)
{
    if (op.lhs < 0 || op.rhs < 0)
        return false;
    auto r = apply_op(op.lhs, op.rhs, op.op);
    return r.ok() && r.value().result == op.result;
}

SearchState SearchState::initial(const Problem& problem)
{
    return SearchState{problem.inputs, {}, NodePath{0}};
}

std::vector<ArithmeticOp> enumerate_ops(const std::vector<Number>& remaining)
{
    std::vector<ArithmeticOp> ops;
    const auto n = remaining.size();
    if (n < 2)
        return ops;
    ops.reserve(n * (n - 1) * 2);

    auto push_unique = [&ops](const ArithmeticOp& op) {
        if (std::find(ops.begin(), ops.end(), op) == ops.end())
            ops.push_back(op);
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Number a = remaining[i];
            const Number b = remaining[j];
            const Number hi = std::max(a, b);
            const Number lo = std::min(a, b);
            push_unique(ArithmeticOp{a, b, Operator::Add, a + b});
            push_unique(ArithmeticOp{hi, lo, Operator::Sub, hi - lo});
            push_unique(ArithmeticOp{a, b, Operator::Mul, a * b});
            if (lo != 0) {
                if (hi % lo == 0)
                    push_unique(ArithmeticOp{hi, lo, Operator::Div, hi / lo});
            } else if (hi != 0) {
                push_unique(ArithmeticOp{lo, hi, Operator::Div, 0});
            }
        }
    }
    return ops;
}

std::vector<ArithmeticOp> enumerate_ops(const SearchState& state)
{
    return enumerate_ops(state.remaining);
}

std::vector<Number> apply_to_numbers(const std::vector<Number>& remaining, const ArithmeticOp& op)
{
    std::vector<Number> out = remaining;
    for (auto operand : {op.lhs, op.rhs}) {
        auto it = std::find(out.begin(), out.end(), operand);
        if (it == out.end())
            throw OperandNotAvailable("operand " + std::to_string(operand) + " not in " + canonical_key(remaining));
        out.erase(it);
    }
    out.push_back(op.result);
    return out;
}

SearchState transition(const SearchState& state, const ArithmeticOp& op, std::uint32_t child_index)
{
    SearchState child;
    child.remaining = apply_to_numbers(state.remaining, op);
    child.history = state.history;
    child.history.push_back(op);
    child.node = state.node;
    child.node.push_back(child_index);
    return child;
}

bool is_goal(const SearchState& state, Number target, GoalRule rule)
{
    if (rule == GoalRule::AllUsed)
        return state.remaining.size() == 1 && state.remaining.front() == target;
    return std::find(state.remaining.begin(), state.remaining.end(), target) != state.remaining.end();
}

bool reaches_goal(const ArithmeticOp& op, const SearchState& child, Number target, GoalRule rule)
{
    return op.result == target && is_goal(child, target, rule);
}

std::string canonical_key(const std::vector<Number>& remaining)
{
    std::vector<Number> sorted = remaining;
    std::sort(sorted.begin(), sorted.end());
    std::string key = "[";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i)
            key += ',';
        key += std::to_string(sorted[i]);
    }
    key += ']';
    return key;
}

std::string canonical_key(const SearchState& state)
{
    return canonical_key(state.remaining);
}

std::optional<std::vector<Number>> replay(const std::vector<Number>& inputs, const std::vector<ArithmeticOp>& ops)
{
    std::vector<Number> numbers = inputs;
    for (const auto& op : ops) {
        if (!is_valid(op))
            return std::nullopt;
        try {
            numbers = apply_to_numbers(numbers, op);
        } catch (const OperandNotAvailable&) {
            return std::nullopt;
        }
    }
    return numbers;
}

}  // namespace sos
