#include "doctest.h"

#include "sos/oracle.hpp"
#include "sos/metrics.hpp"
#include "sos/validator.hpp"
#include "support/brute_force.hpp"
#include "support/corruption.hpp"
#include "support/reference_traces.hpp"

#include <random>

using namespace sos;

namespace {

const Problem kFigure{18, {74, 24, 36, 44}, Split::Train};

std::string replace_once(std::string s, const std::string& from, const std::string& to)
{
    const auto at = s.find(from);
    REQUIRE(at != std::string::npos);
    return s.replace(at, from.size(), to);
}

// Correct traces of several shapes for corruption runs.
std::vector<std::pair<Problem, std::string>> sample_traces()
{
    std::vector<std::pair<Problem, std::string>> out;
    std::mt19937_64 rng{17};
    std::uniform_int_distribution<Number> d(1, 40);
    std::uniform_int_distribution<Number> t(kMinTarget, kMaxTarget);
    while (out.size() < 200) {
        const Problem p{t(rng), {d(rng), d(rng), d(rng), d(rng)}, Split::Train};
        for (const auto& cfg : all_strategies()) {
            const auto traj = run_strategy(cfg, p);
            if (traj.correct() && states_explored(traj) >= 2)
                out.emplace_back(p, serialize(traj));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("reference traces validate cleanly")
{
    for (const char* text : {testing::kSearchTrace, testing::kOptimalPathTrace}) {
        const auto r = validate(text, kFigure);
        CHECK(r.correct);
        CHECK(r.errors.total() == 0);
        CHECK(r.findings.empty());
        REQUIRE(r.solution_path);
        CHECK(r.solution_path->size() == 3);
        CHECK(r.solution_path->back().result == 18);
    }
    CHECK(validate(testing::kSearchTrace, kFigure).states_explored == 30);
    CHECK(validate(testing::kOptimalPathTrace, kFigure).states_explored == 2);
}

TEST_CASE("a wrong operation result is an arithmetic error and breaks correctness")
{
    const auto text = replace_once(testing::kOptimalPathTrace, "Exploring Operation: 74+24=98",
                                   "Exploring Operation: 74+24=97");
    const auto r = validate(text, kFigure);
    CHECK(r.errors.arithmetic == 1);
    CHECK(r.errors.total() == 1);
    CHECK(r.findings.at(0).line == 2);
    // The generated node still carries 98, so the path replays; the goal is still
    // reached through valid ancestry.
    CHECK(r.correct);

    auto broken = replace_once(testing::kOptimalPathTrace, "from Operation: 74+24=98", "from Operation: 74+24=97");
    const auto r2 = validate(broken, kFigure);
    CHECK(r2.errors.arithmetic == 1);
    CHECK_FALSE(r2.correct);
}

TEST_CASE("a goal line without a real derivation is not correct")
{
    const std::string text =
        "Current State: 18:[74, 24, 36, 44], Operations: []\n"
        "18,18 equal: Goal Reached";
    const auto r = validate(text, kFigure);
    CHECK_FALSE(r.correct);
    CHECK(r.errors.other == 1);

    const std::string wrong_goal =
        "Current State: 18:[74, 24, 36, 44], Operations: []\n"
        "Exploring Operation: 74-44=30, Resulting Numbers: [24, 36, 30]\n"
        "30,18 equal: Goal Reached";
    CHECK_FALSE(validate(wrong_goal, kFigure).correct);
}

TEST_CASE("events after the goal are flagged")
{
    const auto text = std::string(testing::kOptimalPathTrace) + "\nMoving to Node #0,1";
    const auto r = validate(text, kFigure);
    CHECK(r.errors.other == 1);
    CHECK(r.correct);
}

TEST_CASE("all-used goal rule")
{
    const Problem p{18, {30, 12, 5, 1}, Split::Train};
    const std::string text =
        "Current State: 18:[30, 12, 5, 1], Operations: []\n"
        "Exploring Operation: 30-12=18, Resulting Numbers: [5, 1, 18]\n"
        "18,18 equal: Goal Reached";
    CHECK(validate(text, p).correct);
    CHECK_FALSE(validate(text, p, GoalRule::AllUsed).correct);
}

TEST_CASE("validator never throws on garbage")
{
    for (const char* text : {"", "\n\n", "hello", "Moving to Node #0,0,0", "18,18 equal: Goal Reached",
                             "Current State: 99:[1], Operations: ['1+1=2']\nNo Solution Found"}) {
        ValidationReport r;
        CHECK_NOTHROW(r = validate(text, kFigure));
        CHECK_FALSE(r.correct);
    }
    CHECK(validate("hello\nworld", kFigure).errors.formatting == 2);
}

TEST_CASE("each corruption lands in its own category on the corrupted line")
{
    const auto traces = sample_traces();
    std::mt19937_64 rng{1};
    for (auto kind : {ErrorKind::Formatting, ErrorKind::Arithmetic, ErrorKind::Exploration, ErrorKind::Other}) {
        std::size_t hit = 0;
        for (const auto& [p, text] : traces) {
            const auto c = testing::corrupt(text, kind, rng);
            const auto r = validate(c.text, p);
            const bool ok = r.errors.of(kind) == 1 && r.errors.total() == 1 && r.findings.at(0).line == c.line;
            if (!ok) {
                MESSAGE(to_string(kind) << " missed at line " << c.line << ": " << r.errors.arithmetic << "/"
                                        << r.errors.formatting << "/" << r.errors.exploration << "/"
                                        << r.errors.other << " findings: " << [&] {
                                            std::string f;
                                            for (const auto& x : r.findings)
                                                f += std::to_string(x.line) + ":" + x.detail + "; ";
                                            return f;
                                        }());
            }
            hit += ok;
        }
        INFO("kind " << to_string(kind));
        CHECK(hit == traces.size());
    }
}

TEST_CASE("correctness agrees with an independent replay of the solution path")
{
    std::mt19937_64 rng{23};
    std::uniform_int_distribution<Number> d(1, 40);
    std::uniform_int_distribution<Number> t(kMinTarget, kMaxTarget);
    for (int trial = 0; trial < 300; ++trial) {
        const Problem p{t(rng), {d(rng), d(rng), d(rng), d(rng)}, Split::Train};
        for (const auto& cfg : all_strategies()) {
            const auto traj = run_strategy(cfg, p);
            const auto r = validate(serialize(traj), p);
            REQUIRE(r.correct == traj.correct());
            if (!r.correct)
                continue;
            // Replay with plain integer arithmetic.
            std::vector<Number> nums = p.inputs;
            for (const auto& op : *r.solution_path) {
                auto take = [&](Number v) {
                    auto it = std::find(nums.begin(), nums.end(), v);
                    REQUIRE(it != nums.end());
                    nums.erase(it);
                };
                take(op.lhs);
                take(op.rhs);
                nums.push_back(op.result);
            }
            CHECK(r.solution_path->back().result == p.target);
        }
    }
}

TEST_CASE("batch summaries")
{
    std::vector<ValidationReport> reports(100);
    for (auto& r : reports) {
        r.correct = true;
        r.states_explored = 4;
    }
    const auto s = batch_report(reports);
    CHECK(s.accuracy.estimate == doctest::Approx(1.0));
    CHECK(s.accuracy.lower == doctest::Approx(0.963).epsilon(0.001));
    CHECK(s.accuracy.upper == doctest::Approx(1.0));
    REQUIRE(s.states_explored);
    CHECK(s.states_explored->estimate == doctest::Approx(4.0));
    CHECK(s.states_explored->width() == doctest::Approx(0.0));

    const std::vector<ValidationReport> one{ValidationReport{}};
    const auto single = batch_report(one);
    CHECK(single.arithmetic.degenerate);
    CHECK_FALSE(single.states_explored);

    CHECK_THROWS_AS((void)batch_report(std::span<const ValidationReport>{}), EmptyBatch);
}
