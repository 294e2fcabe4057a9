#include "sos/star.hpp"

#include "sos/metrics.hpp"
#include "sos/trace.hpp"

#include <unordered_set>

namespace sos {

std::vector<DatasetRecord> star_filter(const std::vector<Rollout>& rollouts, const StarFilterOptions& options)
{
    std::vector<DatasetRecord> kept;
    std::unordered_set<std::string> solved;
    for (const auto& rollout : rollouts) {
        const auto key = problem_key(rollout.problem);
        if (solved.contains(key))
            continue;
        const auto report = validate(rollout.trajectory, rollout.problem, options.goal);
        if (!report.correct)
            continue;
        if (options.require_clean &&
            report.errors.arithmetic + report.errors.exploration + report.errors.other > 0)
            continue;

        auto parsed = parse(rollout.trajectory, ParseMode::Lenient).trajectory;
        parsed.problem = rollout.problem;

        DatasetRecord r;
        r.problem = rollout.problem;
        r.strategy = rollout.strategy;
        r.trajectory = serialize(parsed);
        r.correct = true;
        r.states_explored = states_explored(parsed);
        r.seed = rollout.seed;
        kept.push_back(std::move(r));
        solved.insert(key);
    }
    return kept;
}

Rollout to_rollout(const DatasetRecord& record)
{
    return Rollout{record.problem, record.trajectory, record.strategy.empty() ? "model" : record.strategy,
                   record.seed};
}

double IterationStats::accuracy() const
{
    return validation_total == 0 ? 0.0
                                 : static_cast<double>(validation_correct) / static_cast<double>(validation_total);
}

IterationStats iteration_stats(std::size_t iteration, const std::vector<Rollout>& rollouts,
                               const std::vector<Rollout>& validation, const StarFilterOptions& options)
{
    IterationStats s;
    s.iteration = iteration;
    s.rollouts = rollouts.size();
    const auto kept = star_filter(rollouts, options);
    s.kept = kept.size();
    if (!kept.empty()) {
        double total = 0.0;
        for (const auto& r : kept)
            total += static_cast<double>(r.states_explored);
        s.mean_states_explored = total / static_cast<double>(kept.size());
    }
    s.validation_total = validation.size();
    for (const auto& v : validation) {
        if (sos::validate(v.trajectory, v.problem, options.goal).correct)
            ++s.validation_correct;
    }
    return s;
}

IterationDelta iteration_report(const IterationStats& before, const IterationStats& after)
{
    IterationDelta d;
    if (before.validation_total > 0)
        d.accuracy_before = wilson_interval(before.validation_correct, before.validation_total);
    if (after.validation_total > 0)
        d.accuracy_after = wilson_interval(after.validation_correct, after.validation_total);
    d.accuracy_delta = after.accuracy() - before.accuracy();
    if (before.mean_states_explored && after.mean_states_explored)
        d.states_explored_delta = *after.mean_states_explored - *before.mean_states_explored;
    d.kept_delta = static_cast<long long>(after.kept) - static_cast<long long>(before.kept);
    return d;
}

}  // namespace sos
