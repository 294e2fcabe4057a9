#include "sos/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace sos {

double phi_correlation(const CorrectnessVector& a, const CorrectnessVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("phi_correlation: vectors differ in length");
    if (a.size() < 2)
        throw std::invalid_argument("phi_correlation: need at least two problems");

    // 2x2 contingency table
    double n11 = 0, n10 = 0, n01 = 0, n00 = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] && b[i])
            ++n11;
        else if (a[i])
            ++n10;
        else if (b[i])
            ++n01;
        else
            ++n00;
    }
    const double a1 = n11 + n10, a0 = n01 + n00;
    const double b1 = n11 + n01, b0 = n10 + n00;
    if (a1 == 0 || a0 == 0 || b1 == 0 || b0 == 0)
        throw DegenerateVector("phi_correlation: constant correctness vector");
    return (n11 * n00 - n10 * n01) / std::sqrt(a1 * a0 * b1 * b0);
}

double state_alignment(std::span<const std::string> a, std::span<const std::string> b)
{
    const std::unordered_set<std::string> sa(a.begin(), a.end());
    const std::unordered_set<std::string> sb(b.begin(), b.end());
    if (sa.empty() && sb.empty())
        return 1.0;
    if (sa.empty() || sb.empty())
        return 0.0;
    const auto& small = sa.size() <= sb.size() ? sa : sb;
    const auto& large = sa.size() <= sb.size() ? sb : sa;
    std::size_t shared = 0;
    for (const auto& key : small)
        shared += large.count(key);
    return static_cast<double>(shared) / static_cast<double>(std::max(sa.size(), sb.size()));
}

double state_alignment(const Trajectory& a, const Trajectory& b)
{
    const auto ka = extract_states(a);
    const auto kb = extract_states(b);
    return state_alignment(std::span<const std::string>{ka}, std::span<const std::string>{kb});
}

double mean_state_alignment(std::span<const Trajectory> runs_a, std::span<const Trajectory> runs_b)
{
    if (runs_a.size() != runs_b.size())
        throw std::invalid_argument("mean_state_alignment: runs cover different problem sets");
    if (runs_a.empty())
        throw std::invalid_argument("mean_state_alignment: empty problem set");
    double total = 0.0;
    for (std::size_t i = 0; i < runs_a.size(); ++i)
        total += state_alignment(runs_a[i], runs_b[i]);
    return total / static_cast<double>(runs_a.size());
}

std::size_t states_explored(const Trajectory& trajectory)
{
    return static_cast<std::size_t>(std::count_if(trajectory.events.begin(), trajectory.events.end(),
                                                  [](const TraceEvent& e) {
                                                      return std::holds_alternative<event::GeneratedNode>(e) ||
                                                             std::holds_alternative<event::GeneratedPathNode>(e);
                                                  }));
}

}  // namespace sos
