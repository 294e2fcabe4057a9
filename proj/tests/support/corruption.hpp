#pragma once

// Seeded corruptions of a valid search trace, one per error category.

#include <cstddef>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sos/validator.hpp"

namespace sos::testing {

struct Corruption {
    std::string text;
    std::size_t line = 0;  // 1-based line the validator should blame
};

inline std::vector<std::string> split_lines(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in{text};
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    return lines;
}

inline std::string join_lines(const std::vector<std::string>& lines)
{
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i)
            out += '\n';
        out += lines[i];
    }
    return out;
}

inline std::vector<std::size_t> lines_starting_with(const std::vector<std::string>& lines, const std::string& prefix)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].rfind(prefix, 0) == 0)
            idx.push_back(i);
    }
    return idx;
}

template <class Rng>
std::size_t pick(const std::vector<std::size_t>& v, Rng& rng)
{
    if (v.empty())
        throw std::invalid_argument("trace has no line to corrupt");
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

/// Needs a trace with at least one explored operation and one generated node.
template <class Rng>
Corruption corrupt(const std::string& text, ErrorKind kind, Rng& rng)
{
    auto lines = split_lines(text);
    const std::string explore = "Exploring Operation: ";
    switch (kind) {
    case ErrorKind::Formatting: {
        // Replace the operator with an illegal character.
        const auto i = pick(lines_starting_with(lines, explore), rng);
        auto& l = lines[i];
        const auto op_pos = l.find_first_of("+-*/", explore.size());
        l[op_pos] = '&';
        return {join_lines(lines), i + 1};
    }
    case ErrorKind::Arithmetic: {
        // Off-by-one result in the written operation; resulting numbers untouched.
        const auto i = pick(lines_starting_with(lines, explore), rng);
        auto& l = lines[i];
        const auto eq = l.find('=');
        const auto comma = l.find(',', eq);
        const auto value = std::stoll(l.substr(eq + 1, comma - eq - 1));
        l = l.substr(0, eq + 1) + std::to_string(value + 1) + l.substr(comma);
        return {join_lines(lines), i + 1};
    }
    case ErrorKind::Exploration: {
        // Jump to a node that does not exist (real labels all start with 0). Without
        // any moves in the trace, the jump goes right after a generated node.
        auto moves = lines_starting_with(lines, "Moving to Node #");
        const std::size_t at = moves.empty() ? pick(lines_starting_with(lines, "Generated Node #"), rng) + 1
                                             : pick(moves, rng);
        lines.insert(lines.begin() + static_cast<std::ptrdiff_t>(at), "Moving to Node #9,9");
        return {join_lines(lines), at + 1};
    }
    case ErrorKind::Other: {
        // Bump the first number of a generated node's state.
        const auto i = pick(lines_starting_with(lines, "Generated Node #"), rng);
        auto& l = lines[i];
        const auto open = l.find('[');
        const auto end = l.find_first_of(",]", open);
        const auto value = std::stoll(l.substr(open + 1, end - open - 1));
        l = l.substr(0, open + 1) + std::to_string(value + 1) + l.substr(end);
        return {join_lines(lines), i + 1};
    }
    }
    throw std::invalid_argument("unknown corruption kind");
}

}  // namespace sos::testing
