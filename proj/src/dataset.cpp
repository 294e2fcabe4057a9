#include "sos/dataset.hpp"

#include "sos/metrics.hpp"
#include "sos/oracle.hpp"
#include "sos/parallel.hpp"
#include "sos/strategies.hpp"
#include "sos/trace.hpp"

#include <algorithm>
#include <istream>
#include <numeric>

#include "json.hpp"

namespace sos {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kChunk = 2048;

std::uint64_t problem_stream(Split split)
{
    switch (split) {
    case Split::Train: return seeding::kTrainProblems;
    case Split::Val: return seeding::kValProblems;
    case Split::TestSeenTarget: return seeding::kTestSeenProblems;
    case Split::TestNewTarget: return seeding::kTestNewProblems;
    }
    return seeding::kTrainProblems;
}

Problem sample_for(std::uint64_t seed, Split split, std::size_t index, std::uint64_t attempt, const SplitPlan& plan,
                   const SamplingOptions& sampling)
{
    auto rng = seeding::make_rng(seeding::mix(seeding::mix(record_seed(seed, index), problem_stream(split)), attempt));
    return sample_problem(rng, plan, split, sampling);
}

}  // namespace

SplitPlan SplitPlan::make(std::uint64_t seed)
{
    std::vector<Number> targets(kMaxTarget - kMinTarget + 1);
    std::iota(targets.begin(), targets.end(), kMinTarget);
    auto rng = seeding::make_rng(seeding::mix(seed, seeding::kSplitPlan));
    std::shuffle(targets.begin(), targets.end(), rng);
    SplitPlan plan;
    plan.seed = seed;
    plan.held_out_targets.insert(targets.begin(), targets.begin() + kHeldOutCount);
    return plan;
}

bool SplitPlan::allows(Split split, Number target) const
{
    const bool held_out = held_out_targets.contains(target);
    return split == Split::TestNewTarget ? held_out : !held_out;
}

std::optional<Problem> try_sample_problem(seeding::Rng& rng, const SplitPlan& plan, Split split,
                                          const SamplingOptions& options)
{
    std::uniform_int_distribution<Number> draw(options.min_input, options.max_input);
    std::vector<Number> inputs(options.input_count);
    for (auto& x : inputs)
        x = draw(rng);

    std::vector<Number> numbers = inputs;
    while (numbers.size() > 1) {
        const auto ops = enumerate_ops(numbers);
        if (ops.empty())
            return std::nullopt;
        std::uniform_int_distribution<std::size_t> pick(0, ops.size() - 1);
        numbers = apply_to_numbers(numbers, ops[pick(rng)]);
    }
    const Number target = numbers.front();
    if (target < kMinTarget || target > kMaxTarget || !plan.allows(split, target))
        return std::nullopt;
    if (std::find(inputs.begin(), inputs.end(), target) != inputs.end())
        return std::nullopt;
    return Problem{target, std::move(inputs), split};
}

Problem sample_problem(seeding::Rng& rng, const SplitPlan& plan, Split split, const SamplingOptions& options)
{
    if (options.input_count < 2 || options.min_input < 1 || options.max_input < options.min_input)
        throw std::invalid_argument("sample_problem: bad sampling options");
    for (;;) {
        if (auto p = try_sample_problem(rng, plan, split, options))
            return *std::move(p);
    }
}

DataError::DataError(std::size_t index, const std::string& what)
    : std::runtime_error("record " + std::to_string(index) + ": " + what), index_{index}
{
}

std::string to_json_line(const DatasetRecord& r)
{
    json j;
    j["target"] = r.problem.target;
    j["nums"] = r.problem.inputs;
    j["strategy"] = r.strategy;
    j["split"] = std::string{to_string(r.problem.split)};
    j["correct"] = r.correct;
    j["trajectory"] = r.trajectory;
    j["states_explored"] = r.states_explored;
    j["seed"] = r.seed;
    if (r.rating)
        j["rating"] = *r.rating;
    return j.dump();
}

std::string problem_json_line(const Problem& problem)
{
    json j;
    j["target"] = problem.target;
    j["nums"] = problem.inputs;
    j["split"] = std::string{to_string(problem.split)};
    return j.dump();
}

DatasetRecord record_from_json_line(std::string_view line, std::size_t index)
{
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw DataError(index, std::string{"invalid JSON: "} + e.what());
    }
    if (!j.is_object())
        throw DataError(index, "expected a JSON object");

    DatasetRecord r;
    try {
        if (!j.contains("target") || !j.contains("nums"))
            throw DataError(index, "missing 'target' or 'nums'");
        r.problem.target = j.at("target").get<Number>();
        r.problem.inputs = j.at("nums").get<std::vector<Number>>();
        if (j.contains("split")) {
            const auto name = j.at("split").get<std::string>();
            auto split = split_from_string(name);
            if (!split)
                throw DataError(index, "unknown split '" + name + "'");
            r.problem.split = *split;
        }
        if (j.contains("strategy"))
            r.strategy = j.at("strategy").get<std::string>();
        if (j.contains("trajectory"))
            r.trajectory = j.at("trajectory").get<std::string>();
        if (j.contains("correct"))
            r.correct = j.at("correct").get<bool>();
        if (j.contains("states_explored"))
            r.states_explored = j.at("states_explored").get<std::size_t>();
        if (j.contains("seed"))
            r.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("rating") && !j.at("rating").is_null())
            r.rating = j.at("rating").get<double>();
    } catch (const json::exception& e) {
        throw DataError(index, std::string{"bad field: "} + e.what());
    }
    if (r.problem.inputs.empty())
        throw DataError(index, "'nums' is empty");
    return r;
}

std::vector<DatasetRecord> read_records(std::istream& in)
{
    std::vector<DatasetRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        records.push_back(record_from_json_line(line, records.size()));
    }
    return records;
}

std::uint64_t record_seed(std::uint64_t seed, std::size_t index)
{
    return seeding::mix(seed, index);
}

std::vector<Problem> generate_problems(std::size_t n, std::uint64_t seed, Split split,
                                       const GenerationOptions& options,
                                       const std::unordered_set<std::string>* exclude)
{
    const auto plan = SplitPlan::make(seed);
    std::vector<Problem> problems(n);
    parallel_for(n, options.workers, [&](std::size_t i) {
        problems[i] = sample_for(seed, split, i, 0, plan, options.sampling);
    });

    // Duplicates are redrawn serially so the result does not depend on scheduling.
    std::unordered_set<std::string> seen;
    seen.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::uint64_t attempt = 1;; ++attempt) {
            const auto key = problem_key(problems[i]);
            if (!seen.contains(key) && !(exclude && exclude->contains(key))) {
                seen.insert(key);
                break;
            }
            problems[i] = sample_for(seed, split, i, attempt, plan, options.sampling);
        }
    }
    return problems;
}

std::string draw_strategy(std::uint64_t seed, std::size_t index)
{
    const auto& strategies = all_strategies();
    auto rng = seeding::make_rng(seeding::mix(record_seed(seed, index), seeding::kStrategyChoice));
    std::uniform_int_distribution<std::size_t> pick(0, strategies.size() - 1);
    return strategy_name(strategies[pick(rng)]);
}

DatasetRecord make_record(const Problem& problem, Condition condition, std::uint64_t seed, std::size_t index,
                          const GenerationOptions& options)
{
    DatasetRecord r;
    r.problem = problem;
    r.seed = record_seed(seed, index);
    Trajectory t;
    if (condition == Condition::OptimalPath) {
        r.strategy = "optimal";
        t = optimal_trajectory(problem, options.goal);
    } else {
        r.strategy = options.strategy.value_or(draw_strategy(seed, index));
        auto cfg = strategy_from_name(r.strategy);
        if (!cfg)
            throw std::invalid_argument("unknown strategy '" + r.strategy + "'");
        cfg->goal = options.goal;
        t = run_strategy(*cfg, problem, options.node_budget);
    }
    r.trajectory = serialize(t);
    r.correct = t.correct();
    r.states_explored = states_explored(t);
    return r;
}

void generate_records(const std::vector<Problem>& problems, Condition condition, std::uint64_t seed,
                      const GenerationOptions& options, const RecordSink& sink)
{
    std::vector<DatasetRecord> chunk;
    for (std::size_t begin = 0; begin < problems.size(); begin += kChunk) {
        const std::size_t count = std::min(kChunk, problems.size() - begin);
        chunk.assign(count, DatasetRecord{});
        parallel_for(count, options.workers, [&](std::size_t k) {
            chunk[k] = make_record(problems[begin + k], condition, seed, begin + k, options);
        });
        for (const auto& r : chunk)
            sink(r);
    }
}

namespace {

std::vector<DatasetRecord> collect(std::size_t n, std::uint64_t seed, Condition condition,
                                   const GenerationOptions& options)
{
    if (n < 1)
        throw std::invalid_argument("dataset size must be at least 1");
    const auto problems = generate_problems(n, seed, Split::Train, options);
    std::vector<DatasetRecord> out;
    out.reserve(n);
    generate_records(problems, condition, seed, options, [&](const DatasetRecord& r) { out.push_back(r); });
    return out;
}

}  // namespace

std::vector<DatasetRecord> generate_sos_dataset(std::size_t n, std::uint64_t seed, const GenerationOptions& options)
{
    return collect(n, seed, Condition::Search, options);
}

std::vector<DatasetRecord> generate_op_dataset(std::size_t n, std::uint64_t seed, const GenerationOptions& options)
{
    return collect(n, seed, Condition::OptimalPath, options);
}

TestSets build_test_sets(std::uint64_t seed, const TestSetOptions& options)
{
    const auto& gen = options.generation;
    const auto train = generate_problems(options.train_n, seed, Split::Train, gen);

    std::unordered_set<std::string> taken;
    for (const auto& p : train)
        taken.insert(problem_key(p));

    TestSets sets;
    sets.test_seen_target = generate_problems(options.size, seed, Split::TestSeenTarget, gen, &taken);
    for (const auto& p : sets.test_seen_target)
        taken.insert(problem_key(p));
    sets.test_new_target = generate_problems(options.size, seed, Split::TestNewTarget, gen, &taken);

    // Unsolved: the training record's own strategy failed on it.
    std::vector<char> unsolved(train.size(), 0);
    parallel_for(train.size(), gen.workers, [&](std::size_t i) {
        unsolved[i] = make_record(train[i], Condition::Search, seed, i, gen).correct ? 0 : 1;
    });
    std::vector<char> chosen(train.size(), 0);
    for (std::size_t i = 0; i < train.size() && sets.unsolved_train.size() < options.size; ++i) {
        if (unsolved[i]) {
            sets.unsolved_train.push_back(train[i]);
            chosen[i] = 1;
        }
    }
    if (sets.unsolved_train.size() < options.size)
        throw InsufficientPool("only " + std::to_string(sets.unsolved_train.size()) +
                               " unsolved training problems available");

    std::vector<char> difficult(train.size(), 0);
    parallel_for(train.size(), gen.workers, [&](std::size_t i) {
        if (!chosen[i])
            difficult[i] = is_difficult(train[i]) ? 1 : 0;
    });
    for (std::size_t i = 0; i < train.size() && sets.difficult.size() < options.size; ++i) {
        if (difficult[i])
            sets.difficult.push_back(train[i]);
    }
    if (sets.difficult.size() < options.size)
        throw InsufficientPool("only " + std::to_string(sets.difficult.size()) +
                               " difficult training problems available");
    return sets;
}

}  // namespace sos
