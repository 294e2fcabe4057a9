#pragma once

// Reference enumerator for Countdown used only by tests. It walks ordered operand
// pairs with plain integer arithmetic and no deduplication, so it shares no code
// path with the library's enumerate_ops/transition.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <vector>

namespace sos::testing {

struct BruteForce {
    std::int64_t target = 0;
    bool require_all_used = false;

    bool solvable = false;
    int shortest = std::numeric_limits<int>::max();
    std::int64_t max_value = 0;
    std::set<std::int64_t> reachable;

    void run(std::vector<std::int64_t> numbers, int depth = 0)
    {
        for (auto x : numbers) {
            max_value = std::max(max_value, x);
            reachable.insert(x);
        }
        const std::size_t n = numbers.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                const auto a = numbers[i];
                const auto b = numbers[j];
                std::vector<std::int64_t> results{a + b, a * b};
                if (a >= b)
                    results.push_back(a - b);
                if (b != 0 && a % b == 0)
                    results.push_back(a / b);
                std::vector<std::int64_t> rest;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k != i && k != j)
                        rest.push_back(numbers[k]);
                }
                for (auto r : results) {
                    auto next = rest;
                    next.push_back(r);
                    const bool goal = r == target && (!require_all_used || next.size() == 1);
                    if (goal) {
                        solvable = true;
                        shortest = std::min(shortest, depth + 1);
                        max_value = std::max(max_value, r);
                        reachable.insert(r);
                        continue;
                    }
                    run(next, depth + 1);
                }
            }
        }
    }
};

inline BruteForce brute_force(const std::vector<std::int64_t>& inputs, std::int64_t target,
                              bool require_all_used = false)
{
    BruteForce bf;
    bf.target = target;
    bf.require_all_used = require_all_used;
    bf.run(inputs);
    return bf;
}

}  // namespace sos::testing
