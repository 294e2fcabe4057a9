#include "doctest.h"

#include "sos/oracle.hpp"
#include "sos/validator.hpp"
#include "support/brute_force.hpp"
#include "support/reference_traces.hpp"

#include <random>

using namespace sos;

namespace {

const Problem kFigure{18, {74, 24, 36, 44}, Split::Train};

}  // namespace

TEST_CASE("oracle reproduces the reference optimal path")
{
    const auto solved = solve_exhaustive(kFigure);
    REQUIRE(solved.solvable);
    REQUIRE(solved.one_path);
    CHECK(solved.one_path->size() == 3);
    CHECK(serialize(optimal_trajectory(kFigure)) == testing::kOptimalPathTrace);
}

TEST_CASE("unsolvable problems")
{
    const Problem p{10, {1, 1, 1, 1}, Split::Train};
    const auto solved = solve_exhaustive(p);
    CHECK_FALSE(solved.solvable);
    CHECK(solved.solution_count == 0);
    CHECK_FALSE(solved.one_path);
    CHECK(serialize(optimal_trajectory(p)) == "Current State: 10:[1, 1, 1, 1], Operations: []\nNo Solution Found");
    CHECK(classify_difficulty(p) == 0);
    CHECK_FALSE(is_difficult(p));
}

TEST_CASE("oracle agrees with the brute-force reference")
{
    std::mt19937_64 rng{31337};
    std::uniform_int_distribution<Number> d(1, 30);
    std::uniform_int_distribution<Number> t(kMinTarget, kMaxTarget);
    for (int trial = 0; trial < 300; ++trial) {
        const Problem p{t(rng), {d(rng), d(rng), d(rng), d(rng)}, Split::Train};
        for (auto rule : {GoalRule::AnyResult, GoalRule::AllUsed}) {
            const auto ours = solve_exhaustive(p, rule);
            const auto ref = testing::brute_force(p.inputs, p.target, rule == GoalRule::AllUsed);
            REQUIRE(ours.solvable == ref.solvable);
            if (!ours.solvable)
                continue;
            CHECK(static_cast<int>(ours.one_path->size()) == ref.shortest);
            auto replayed = replay(p.inputs, *ours.one_path);
            REQUIRE(replayed);
            CHECK(ours.one_path->back().result == p.target);

            const auto text = serialize(optimal_trajectory(p, rule));
            const auto report = validate(text, p, rule);
            CHECK(report.correct);
            CHECK(report.errors.total() == 0);
        }
    }
}

TEST_CASE("adding a number never makes a problem unsolvable")
{
    std::mt19937_64 rng{8};
    std::uniform_int_distribution<Number> d(1, 30);
    std::uniform_int_distribution<Number> t(kMinTarget, kMaxTarget);
    for (int trial = 0; trial < 300; ++trial) {
        Problem three{t(rng), {d(rng), d(rng), d(rng)}, Split::Train};
        Problem four = three;
        four.inputs.push_back(d(rng));
        if (solve_exhaustive(three).solvable)
            CHECK(solve_exhaustive(four).solvable);
    }
}

TEST_CASE("difficulty mask and solvability")
{
    const auto mask = classify_difficulty(kFigure);
    CHECK((mask & 1u) == 0);         // dfs-sum prunes the whole root
    CHECK((mask & (1u << 10)) != 0);  // bfs-5-sum
    CHECK((mask & ~kAllStrategiesMask) == 0);
    CHECK_FALSE(is_difficult(kFigure));

    std::mt19937_64 rng{4};
    std::uniform_int_distribution<Number> d(1, 50);
    std::uniform_int_distribution<Number> t(kMinTarget, kMaxTarget);
    for (int trial = 0; trial < 100; ++trial) {
        const Problem p{t(rng), {d(rng), d(rng), d(rng), d(rng)}, Split::Train};
        if (classify_difficulty(p) != 0)
            CHECK(solve_exhaustive(p).solvable);
    }
}
