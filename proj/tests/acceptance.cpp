// Acceptance checks. Prints one PASS/FAIL line per criterion and exits non-zero
// when any criterion fails. Usage: acceptance <path-to-sos-cli>

#include "sos/dataset.hpp"
#include "sos/metrics.hpp"
#include "sos/oracle.hpp"
#include "sos/parallel.hpp"
#include "sos/star.hpp"
#include "sos/strategies.hpp"
#include "sos/validator.hpp"
#include "support/corruption.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <unistd.h>

using namespace sos;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string cli;
fs::path workdir;

std::string fmt(double v, int precision = 4)
{
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(precision);
    os << v;
    return os.str();
}

std::string sci(double v)
{
    std::ostringstream os;
    os << std::scientific << v;
    return os.str();
}

std::string run_command(const std::string& command, int& status)
{
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
        out.append(buf, n);
    status = pclose(pipe);
    return out;
}

std::string read_file(const fs::path& p)
{
    std::ifstream in{p, std::ios::binary};
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Problem random_problem(seeding::Rng& rng)
{
    std::uniform_int_distribution<Number> d(1, 50);
    std::uniform_int_distribution<Number> t(kMinTarget, kMaxTarget);
    return Problem{t(rng), {d(rng), d(rng), d(rng), d(rng)}, Split::Train};
}

Outcome grammar_round_trip()
{
    const std::size_t n = 10'000;
    const std::uint64_t seed = 101;
    const auto problems = generate_problems(n, seed, Split::Train);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto t = run_strategy(*strategy_from_name(draw_strategy(seed, i)), problems[i]);
        const auto op = optimal_trajectory(problems[i]);
        for (const auto* traj : {&t, &op}) {
            const auto text = serialize(*traj);
            try {
                const auto back = parse(text, ParseMode::Strict);
                // The format tag is not recoverable from text when no path node is present.
                const auto& t2 = back.trajectory;
                if (t2.problem != traj->problem || t2.events != traj->events || serialize(t2) != text)
                    ++failures;
            } catch (const SyntaxError&) {
                ++failures;
            }
        }
    }
    return {failures == 0, std::to_string(n) + " search + " + std::to_string(n) + " optimal-path trajectories, " +
                               std::to_string(failures) + " failures"};
}

Outcome oracle_equivalence()
{
    auto rng = seeding::make_rng(202);
    std::size_t disagreements = 0, bad_claims = 0, claims = 0, solvable = 0;
    const std::size_t n = 1'000;
    auto unpruned = StrategyConfig::dfs(HeuristicKind::Sum);
    unpruned.prune = PruneDirection::Disabled;
    for (std::size_t i = 0; i < n; ++i) {
        const auto p = random_problem(rng);
        const bool oracle = solve_exhaustive(p).solvable;
        solvable += oracle;
        if (run_strategy(unpruned, p).correct() != oracle)
            ++disagreements;
        for (const auto& cfg : all_strategies()) {
            const auto t = run_strategy(cfg, p);
            if (!t.correct())
                continue;
            ++claims;
            const auto path = extract_solution_path(t);
            const auto end = path.found() ? replay(p.inputs, path.ops) : std::nullopt;
            if (!end || path.ops.empty() || path.ops.back().result != p.target)
                ++bad_claims;
        }
    }
    return {disagreements == 0 && bad_claims == 0,
            std::to_string(n) + " problems (" + std::to_string(solvable) + " solvable), " +
                std::to_string(disagreements) + " solvability disagreements, " + std::to_string(bad_claims) + "/" +
                std::to_string(claims) + " strategy solutions failed replay"};
}

Outcome figure_reproduction()
{
    int status = 0;
    const auto out = run_command(cli + " solve --nums 74,24,36,44 --target 18 --strategy oracle", status);
    if (status != 0)
        return {false, "solve exited with status " + std::to_string(status)};
    auto text = out;
    while (!text.empty() && text.back() == '\n')
        text.pop_back();
    const auto last_line = text.substr(text.rfind('\n') + 1);
    const Problem p{18, {74, 24, 36, 44}, Split::Train};
    const auto path = extract_solution_path(parse(text, ParseMode::Lenient).trajectory);
    const bool ok = last_line == "18,18 equal: Goal Reached" && path.found() && path.ops.size() == 3 &&
                    path.ops.back().to_string() == "98-80=18" && validate(text, p).correct;
    std::string ops;
    for (const auto& op : path.ops)
        ops += (ops.empty() ? "" : ", ") + op.to_string();
    return {ok, "path [" + ops + "], last line '" + last_line + "'"};
}

Outcome dataset_correct_rate()
{
    const std::size_t n = 50'000;
    GenerationOptions opts;
    opts.workers = std::max(1u, std::thread::hardware_concurrency());
    const auto records = generate_sos_dataset(n, 303, opts);
    std::size_t correct = 0;
    for (const auto& r : records)
        correct += r.correct;
    const auto ci = wilson_interval(correct, n);
    const bool ok = ci.estimate >= 0.45 && ci.estimate <= 0.70;
    return {ok, "correct fraction " + fmt(ci.estimate) + " (95% CI " + fmt(ci.lower) + "-" + fmt(ci.upper) +
                    ") over " + std::to_string(n) + " trajectories; required [0.45, 0.70]"};
}

Outcome corruption_detection()
{
    // 1,000 correct search traces with at least one generated node.
    std::vector<DatasetRecord> traces;
    const auto records = generate_sos_dataset(3'000, 404);
    for (const auto& r : records) {
        if (r.correct && r.states_explored >= 1 && traces.size() < 1'000)
            traces.push_back(r);
    }
    if (traces.size() < 1'000)
        return {false, "only " + std::to_string(traces.size()) + " usable traces"};

    auto rng = seeding::make_rng(405);
    bool ok = true;
    std::string detail;
    for (auto kind : {ErrorKind::Formatting, ErrorKind::Arithmetic, ErrorKind::Other, ErrorKind::Exploration}) {
        std::size_t hit = 0;
        for (const auto& r : traces) {
            const auto c = testing::corrupt(r.trajectory, kind, rng);
            const auto report = validate(c.text, r.problem);
            hit += report.errors.of(kind) >= 1 && report.errors.total() == report.errors.of(kind) &&
                   report.findings.front().line == c.line;
        }
        const double rate = static_cast<double>(hit) / static_cast<double>(traces.size());
        ok = ok && rate >= 0.999;
        detail += std::string{detail.empty() ? "" : ", "} + std::string{to_string(kind)} + " " + fmt(rate * 100, 1) + "%";
    }
    return {ok, detail + " (1000 traces per kind; required >= 99.9%)"};
}

Outcome metric_properties()
{
    // Alignment axioms over random trajectory pairs.
    const auto problems = generate_problems(1'000, 505, Split::Train);
    const auto& strategies = all_strategies();
    std::vector<std::vector<Trajectory>> runs(strategies.size(), std::vector<Trajectory>(problems.size()));
    parallel_for(problems.size(), std::max(1u, std::thread::hardware_concurrency()), [&](std::size_t i) {
        for (std::size_t s = 0; s < strategies.size(); ++s)
            runs[s][i] = run_strategy(strategies[s], problems[i]);
    });

    auto rng = seeding::make_rng(506);
    std::uniform_int_distribution<std::size_t> pick_s(0, strategies.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_p(0, problems.size() - 1);
    std::size_t violations = 0;
    for (int k = 0; k < 10'000; ++k) {
        const auto& a = runs[pick_s(rng)][pick_p(rng)];
        const auto& b = runs[pick_s(rng)][pick_p(rng)];
        const double ab = state_alignment(a, b);
        const double ba = state_alignment(b, a);
        violations += ab != ba || ab < 0.0 || ab > 1.0 || state_alignment(a, a) != 1.0;
    }

    // Phi on hand-computed 4-element vectors.
    struct PhiCase {
        CorrectnessVector a, b;
        double expected;
    };
    const std::vector<PhiCase> cases{
        {{true, true, false, false}, {true, true, false, false}, 1.0},
        {{true, true, false, false}, {false, false, true, true}, -1.0},
        {{true, true, false, false}, {true, false, true, false}, 0.0},
        {{true, true, true, false}, {true, true, false, false}, 1.0 / std::sqrt(3.0)},
        {{true, false, false, false}, {true, true, false, false}, 1.0 / std::sqrt(3.0)},
        {{true, false, false, false}, {false, true, true, true}, -1.0},
    };
    double phi_error = 0.0;
    for (const auto& c : cases)
        phi_error = std::max(phi_error, std::abs(phi_correlation(c.a, c.b) - c.expected));

    // 12x12 alignment: same-heuristic Sum pairs against cross-heuristic pairs.
    double sum_pairs = 0.0, cross_pairs = 0.0, max_distinct = 0.0;
    std::size_t n_sum = 0, n_cross = 0;
    for (std::size_t x = 0; x < strategies.size(); ++x) {
        for (std::size_t y = x + 1; y < strategies.size(); ++y) {
            const double m = mean_state_alignment(runs[x], runs[y]);
            max_distinct = std::max(max_distinct, m);
            const bool sx = strategies[x].heuristic == HeuristicKind::Sum;
            const bool sy = strategies[y].heuristic == HeuristicKind::Sum;
            if (sx && sy) {
                sum_pairs += m;
                ++n_sum;
            } else if (sx != sy) {
                cross_pairs += m;
                ++n_cross;
            }
        }
    }
    sum_pairs /= static_cast<double>(n_sum);
    cross_pairs /= static_cast<double>(n_cross);

    const bool ok = violations == 0 && phi_error <= 1e-12 && sum_pairs > cross_pairs && max_distinct < 1.0;
    return {ok, "alignment axioms: " + std::to_string(violations) + " violations in 10000 pairs; phi max error " +
                    sci(phi_error) + "; Sum-Sum pairs " + fmt(sum_pairs) + " vs cross-heuristic pairs " +
                    fmt(cross_pairs) + " (required Sum-Sum > cross); max distinct-pair alignment " +
                    fmt(max_distinct)};
}

Outcome determinism()
{
    const auto one = workdir / "w1.jsonl";
    const auto eight = workdir / "w8.jsonl";
    int s1 = 0, s8 = 0;
    run_command(cli + " gen-dataset --n 10000 --seed 7 --workers 1 --out " + one.string(), s1);
    run_command(cli + " gen-dataset --n 10000 --seed 7 --workers 8 --out " + eight.string(), s8);
    if (s1 != 0 || s8 != 0)
        return {false, "gen-dataset failed"};
    const auto a = read_file(one);
    const auto b = read_file(eight);
    std::ostringstream h;
    h << std::hex << std::hash<std::string>{}(a) << " / " << std::hash<std::string>{}(b);
    return {!a.empty() && a == b, "1 worker vs 8 workers, " + std::to_string(a.size()) + " bytes, hashes " + h.str()};
}

Outcome star_soundness()
{
    const auto problems = generate_problems(100, 606, Split::Train);
    auto rng = seeding::make_rng(607);
    std::vector<Rollout> rollouts;
    for (std::size_t i = 0; i < problems.size(); ++i) {
        auto text = serialize(optimal_trajectory(problems[i]));
        if (i >= 60) {
            auto lines = testing::split_lines(text);
            if (i % 2 == 0) {
                lines.pop_back();  // no goal line
            } else {
                // Off-by-one on the operation that produces the goal.
                auto& l = lines[lines.size() - 2];
                const auto eq = l.find('=');
                const auto comma = l.find(',', eq);
                l = l.substr(0, eq + 1) + std::to_string(std::stoll(l.substr(eq + 1, comma - eq - 1)) + 1) +
                    l.substr(comma);
            }
            text = testing::join_lines(lines);
        }
        rollouts.push_back(Rollout{problems[i], text, "model", i});
    }
    std::shuffle(rollouts.begin(), rollouts.end(), rng);

    const auto kept = star_filter(rollouts);
    bool only_good = true;
    for (const auto& r : kept)
        only_good = only_good && r.seed < 60;
    std::vector<Rollout> again;
    for (const auto& r : kept)
        again.push_back(to_rollout(r));
    const bool idempotent = star_filter(again) == kept;
    return {kept.size() == 60 && only_good && idempotent,
            "kept " + std::to_string(kept.size()) + " of 100 (60 correct, 40 corrupt); idempotent: " +
                (idempotent ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-sos-cli>\n";
        return 2;
    }
    cli = argv[1];
    workdir = fs::temp_directory_path() / ("sos_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(workdir);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"grammar round-trip", grammar_round_trip},
        {"oracle equivalence", oracle_equivalence},
        {"figure reproduction", figure_reproduction},
        {"dataset correct-rate", dataset_correct_rate},
        {"error-taxonomy detection", corruption_detection},
        {"metric properties", metric_properties},
        {"determinism", determinism},
        {"star-filter soundness", star_soundness},
    };

    int failed = 0;
    for (const auto& [name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string{"exception: "} + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << " [" << fmt(secs, 1) << "s]"
                  << std::endl;
        failed += !o.pass;
    }
    fs::remove_all(workdir);
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
