#pragma once

#include "sos/domain.hpp"
#include "sos/seeding.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace sos {

struct SamplingOptions {
    Number min_input = 1;
    Number max_input = 50;
    std::size_t input_count = kDefaultInputCount;
};

/// Targets withheld from training: 10% of [10,100], drawn from the run seed.
struct SplitPlan {
    std::set<Number> held_out_targets;
    std::uint64_t seed = 0;

    static constexpr std::size_t kHeldOutCount = 9;

    [[nodiscard]] static SplitPlan make(std::uint64_t seed);
    [[nodiscard]] bool allows(Split split, Number target) const;
};

/// Forward construction: draw the inputs, combine them with random legal operations
/// until one number is left, and accept it as the target when it lies in [10,100],
/// suits the split, and is not one of the inputs. Solvable by construction.
[[nodiscard]] Problem sample_problem(seeding::Rng& rng, const SplitPlan& plan, Split split,
                                     const SamplingOptions& options = {});

/// Attempts made by one sample_problem call, exposed for rejection-rate measurements.
[[nodiscard]] std::optional<Problem> try_sample_problem(seeding::Rng& rng, const SplitPlan& plan, Split split,
                                                        const SamplingOptions& options = {});

struct DatasetRecord {
    Problem problem;
    std::string strategy;
    std::string trajectory;
    bool correct = false;
    std::size_t states_explored = 0;
    std::uint64_t seed = 0;
    std::optional<double> rating;

    friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

/// Malformed input data; carries the 0-based record index.
class DataError : public std::runtime_error {
public:
    DataError(std::size_t index, const std::string& what);
    [[nodiscard]] std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// One JSON object, no trailing newline. Field order: target, nums, strategy,
/// split, correct, trajectory, states_explored, seed, rating (only when set).
[[nodiscard]] std::string to_json_line(const DatasetRecord& record);

/// Accepts full records as well as bare problems (`target`, `nums`, optional `split`).
[[nodiscard]] DatasetRecord record_from_json_line(std::string_view line, std::size_t index);

[[nodiscard]] std::string problem_json_line(const Problem& problem);

/// Reads JSON-lines records, skipping blank lines. Throws DataError.
[[nodiscard]] std::vector<DatasetRecord> read_records(std::istream& in);

enum class Condition { Search, OptimalPath };

struct GenerationOptions {
    std::size_t workers = 1;
    SamplingOptions sampling;
    GoalRule goal = GoalRule::AnyResult;
    /// Fixed strategy name; unset draws one of the 12 uniformly per record.
    std::optional<std::string> strategy;
    std::optional<std::size_t> node_budget;
};

[[nodiscard]] std::uint64_t record_seed(std::uint64_t seed, std::size_t index);

/// `n` distinct problems for `split`, deduplicated by (sorted inputs, target) among
/// themselves and against `exclude`. Identical for any worker count.
[[nodiscard]] std::vector<Problem> generate_problems(std::size_t n, std::uint64_t seed, Split split,
                                                     const GenerationOptions& options = {},
                                                     const std::unordered_set<std::string>* exclude = nullptr);

/// Strategy drawn for record `index` when no fixed strategy is configured.
[[nodiscard]] std::string draw_strategy(std::uint64_t seed, std::size_t index);

[[nodiscard]] DatasetRecord make_record(const Problem& problem, Condition condition, std::uint64_t seed,
                                        std::size_t index, const GenerationOptions& options = {});

using RecordSink = std::function<void(const DatasetRecord&)>;

/// Streams records for `problems` in index order, computing them in parallel chunks.
void generate_records(const std::vector<Problem>& problems, Condition condition, std::uint64_t seed,
                      const GenerationOptions& options, const RecordSink& sink);

/// Training datasets. Both conditions share the problem at every index.
[[nodiscard]] std::vector<DatasetRecord> generate_sos_dataset(std::size_t n, std::uint64_t seed,
                                                              const GenerationOptions& options = {});
[[nodiscard]] std::vector<DatasetRecord> generate_op_dataset(std::size_t n, std::uint64_t seed,
                                                             const GenerationOptions& options = {});

class InsufficientPool : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TestSetOptions {
    std::size_t size = 10'000;
    /// Size of the training set the test sets are carved against.
    std::size_t train_n = 500'000;
    GenerationOptions generation;
};

struct TestSets {
    std::vector<Problem> test_seen_target;
    std::vector<Problem> test_new_target;
    std::vector<Problem> unsolved_train;
    std::vector<Problem> difficult;
};

/// Four disjoint problem sets. Throws InsufficientPool when the training set is
/// too small to supply the unsolved or difficult sets.
[[nodiscard]] TestSets build_test_sets(std::uint64_t seed, const TestSetOptions& options = {});

}  // namespace sos
