// sos: command-line entry point for the Countdown stream-of-search toolkit.

#include "sos/dataset.hpp"
#include "sos/parallel.hpp"
#include "sos/metrics.hpp"
#include "sos/oracle.hpp"
#include "sos/star.hpp"
#include "sos/strategies.hpp"
#include "sos/validator.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#ifndef SOS_VERSION
#define SOS_VERSION "0.0.0"
#endif

namespace {

using json = nlohmann::ordered_json;
using namespace sos;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::size_t default_workers()
{
    if (const char* env = std::getenv("SOS_WORKERS")) {
        try {
            const auto n = std::stoul(env);
            if (n > 0)
                return n;
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<DatasetRecord> load_records(const std::string& path)
{
    std::ifstream in{path};
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_records(in);
}

// Writes to `path`, or stdout when the path is empty or "-".
class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty() && path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw std::runtime_error("cannot write " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

void write_manifest(const std::string& out, const std::string& subcommand, const std::vector<std::string>& args,
                    json config)
{
    if (out.empty() || out == "-")
        return;
    json m;
    m["tool"] = "sos";
    m["version"] = SOS_VERSION;
    m["subcommand"] = subcommand;
    m["args"] = args;
    m["config"] = std::move(config);
    std::ofstream f{out + ".manifest.json"};
    f << std::setw(2) << m << '\n';
}

GoalRule goal_rule(bool all_used) { return all_used ? GoalRule::AllUsed : GoalRule::AnyResult; }

std::vector<Number> parse_nums(const std::string& text)
{
    std::vector<Number> nums;
    std::stringstream ss{text};
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            std::size_t used = 0;
            nums.push_back(std::stoll(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("--nums: '" + item + "' is not an integer");
        }
    }
    if (nums.empty())
        throw UsageError("--nums is empty");
    return nums;
}

Split parse_split(const std::string& name)
{
    auto s = split_from_string(name);
    if (!s)
        throw UsageError("unknown split '" + name + "'");
    return *s;
}

// Problems for rollouts: from --problems (index-aligned) or from the rollout records.
std::vector<Problem> problems_for(const std::vector<DatasetRecord>& rollouts, const std::string& problems_path)
{
    std::vector<Problem> problems;
    if (problems_path.empty()) {
        for (const auto& r : rollouts)
            problems.push_back(r.problem);
        return problems;
    }
    for (const auto& r : load_records(problems_path))
        problems.push_back(r.problem);
    if (problems.size() != rollouts.size())
        throw DataError(std::min(problems.size(), rollouts.size()),
                        "problems file has " + std::to_string(problems.size()) + " records, rollouts file has " +
                            std::to_string(rollouts.size()));
    for (std::size_t i = 0; i < problems.size(); ++i) {
        if (!rollouts[i].problem.inputs.empty() && !(rollouts[i].problem.target == problems[i].target &&
                                                     canonical_key(rollouts[i].problem.inputs) ==
                                                         canonical_key(problems[i].inputs)))
            throw DataError(i, "rollout does not match its problem");
    }
    return problems;
}

json interval_json(const Interval& i)
{
    return json{{"estimate", i.estimate}, {"lower", i.lower}, {"upper", i.upper}, {"degenerate", i.degenerate}};
}

json ops_json(const std::vector<ArithmeticOp>& ops)
{
    json a = json::array();
    for (const auto& op : ops)
        a.push_back(op.to_string());
    return a;
}

std::string file_stem(const std::string& path)
{
    auto name = path.substr(path.find_last_of('/') + 1);
    const auto dot = name.find('.');
    return dot == std::string::npos || dot == 0 ? name : name.substr(0, dot);
}

struct Options {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t workers = default_workers();
    std::string out;
    std::string split = "train";
    std::string condition = "sos";
    std::string format = "jsonl";
    std::string strategy;
    std::string problems;
    std::string rollouts;
    std::string input;
    std::string manifest;
    std::vector<std::string> runs;
    std::string nums;
    Number target = 0;
    std::size_t input_count = kDefaultInputCount;
    std::optional<std::size_t> node_budget;
    bool all_used = false;
    bool require_clean = false;
    bool all_strategies = false;
};

int cmd_gen_problems(const Options& o, const std::vector<std::string>& args)
{
    GenerationOptions gen;
    gen.workers = o.workers;
    gen.sampling.input_count = o.input_count;
    const auto problems = generate_problems(o.n, o.seed, parse_split(o.split), gen);
    Output out{o.out};
    for (const auto& p : problems)
        out.stream() << problem_json_line(p) << '\n';
    write_manifest(o.out, "gen-problems", args,
                   {{"n", o.n}, {"seed", o.seed}, {"split", o.split}, {"input_count", o.input_count}});
    return kExitOk;
}

int cmd_gen_dataset(const Options& o, const std::vector<std::string>& args)
{
    if (o.condition != "sos" && o.condition != "op")
        throw UsageError("--condition must be sos or op");
    GenerationOptions gen;
    gen.workers = o.workers;
    gen.sampling.input_count = o.input_count;
    gen.goal = goal_rule(o.all_used);
    gen.node_budget = o.node_budget;
    if (!o.strategy.empty()) {
        if (!strategy_from_name(o.strategy))
            throw UsageError("unknown strategy '" + o.strategy + "'");
        gen.strategy = o.strategy;
    }

    std::vector<Problem> problems;
    if (o.problems.empty()) {
        if (o.n == 0)
            throw UsageError("--n must be at least 1");
        problems = generate_problems(o.n, o.seed, Split::Train, gen);
    } else {
        for (const auto& r : load_records(o.problems))
            problems.push_back(r.problem);
    }

    Output out{o.out};
    auto& os = out.stream();
    const auto condition = o.condition == "op" ? Condition::OptimalPath : Condition::Search;
    const bool text = o.format == "txt";
    std::size_t written = 0;
    generate_records(problems, condition, o.seed, gen, [&](const DatasetRecord& r) {
        if (text)
            os << (written ? "\n" : "") << r.trajectory << '\n';
        else
            os << to_json_line(r) << '\n';
        ++written;
    });
    write_manifest(o.out, "gen-dataset", args,
                   {{"n", problems.size()},
                    {"seed", o.seed},
                    {"condition", o.condition},
                    {"format", o.format},
                    {"strategy", o.strategy.empty() ? json(nullptr) : json(o.strategy)},
                    {"problems", o.problems.empty() ? json(nullptr) : json(o.problems)},
                    {"input_count", o.input_count},
                    {"require_all_used", o.all_used}});
    return kExitOk;
}

int cmd_solve(const Options& o)
{
    Problem p{o.target, parse_nums(o.nums), Split::Train};
    const auto goal = goal_rule(o.all_used);
    Trajectory t;
    if (o.strategy.empty() || o.strategy == "oracle") {
        t = optimal_trajectory(p, goal);
    } else {
        auto cfg = strategy_from_name(o.strategy);
        if (!cfg)
            throw UsageError("unknown strategy '" + o.strategy + "'");
        cfg->goal = goal;
        t = run_strategy(*cfg, p, o.node_budget);
    }
    std::cout << serialize(t) << '\n';
    return kExitOk;
}

int cmd_validate(const Options& o, const std::vector<std::string>& args)
{
    const auto rollouts = load_records(o.rollouts);
    const auto problems = problems_for(rollouts, o.problems);
    const auto goal = goal_rule(o.all_used);

    std::vector<ValidationReport> reports(rollouts.size());
    parallel_for(rollouts.size(), o.workers,
                 [&](std::size_t i) { reports[i] = validate(rollouts[i].trajectory, problems[i], goal); });
    if (reports.empty())
        throw DataError(0, "no rollouts to validate");

    const auto s = batch_report(reports);
    json summary{{"trajectories", s.trajectories},
                 {"correct", s.correct},
                 {"accuracy", interval_json(s.accuracy)},
                 {"errors",
                  {{"arithmetic", interval_json(s.arithmetic)},
                   {"formatting", interval_json(s.formatting)},
                   {"exploration", interval_json(s.exploration)},
                   {"other", interval_json(s.other)}}},
                 {"states_explored", s.states_explored ? interval_json(*s.states_explored) : json(nullptr)}};
    json items = json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        json findings = json::array();
        for (const auto& f : r.findings)
            findings.push_back({{"line", f.line}, {"kind", std::string{to_string(f.kind)}}, {"detail", f.detail}});
        items.push_back({{"index", i},
                         {"correct", r.correct},
                         {"errors",
                          {{"arithmetic", r.errors.arithmetic},
                           {"formatting", r.errors.formatting},
                           {"exploration", r.errors.exploration},
                           {"other", r.errors.other}}},
                         {"states_explored", r.states_explored},
                         {"solution_path", r.solution_path ? ops_json(*r.solution_path) : json(nullptr)},
                         {"states_visited", r.states_visited},
                         {"findings", std::move(findings)}});
    }
    Output out{o.out};
    out.stream() << std::setw(2) << json{{"summary", summary}, {"reports", items}} << '\n';
    if (!o.out.empty() && o.out != "-")
        std::cerr << "accuracy " << s.accuracy.estimate << " (" << s.correct << "/" << s.trajectories << ")\n";
    write_manifest(o.out, "validate", args,
                   {{"rollouts", o.rollouts}, {"problems", o.problems}, {"require_all_used", o.all_used}});
    return kExitOk;
}

struct Run {
    std::string name;
    std::vector<Trajectory> trajectories;
    CorrectnessVector correct;
};

std::string csv_value(const std::optional<double>& v)
{
    if (!v)
        return "";
    std::ostringstream os;
    os << std::setprecision(10) << *v;
    return os.str();
}

int cmd_metrics(const Options& o, const std::vector<std::string>& args)
{
    const auto goal = goal_rule(o.all_used);
    std::vector<Run> runs;
    if (o.all_strategies) {
        if (o.problems.empty())
            throw UsageError("--all-strategies needs --problems");
        std::vector<Problem> problems;
        for (const auto& r : load_records(o.problems))
            problems.push_back(r.problem);
        for (auto cfg : all_strategies()) {
            cfg.goal = goal;
            Run run{strategy_name(cfg), std::vector<Trajectory>(problems.size()), {}};
            parallel_for(problems.size(), o.workers,
                         [&](std::size_t i) { run.trajectories[i] = run_strategy(cfg, problems[i]); });
            for (const auto& t : run.trajectories)
                run.correct.push_back(t.correct());
            runs.push_back(std::move(run));
        }
    } else {
        if (o.runs.size() < 2)
            throw UsageError("metrics needs at least two runs (--runs-a/--runs-b or --runs)");
        for (const auto& path : o.runs) {
            const auto records = load_records(path);
            const auto problems = problems_for(records, o.problems);
            Run run{file_stem(path), {}, {}};
            for (std::size_t i = 0; i < records.size(); ++i) {
                auto t = parse(records[i].trajectory, ParseMode::Lenient).trajectory;
                t.problem = problems[i];
                run.trajectories.push_back(std::move(t));
                run.correct.push_back(validate(records[i].trajectory, problems[i], goal).correct);
            }
            if (!runs.empty() && run.trajectories.size() != runs.front().trajectories.size())
                throw DataError(std::min(run.trajectories.size(), runs.front().trajectories.size()),
                                path + " covers a different number of problems");
            runs.push_back(std::move(run));
        }
    }
    if (runs.front().trajectories.empty())
        throw DataError(0, "no problems to compare");

    const std::size_t k = runs.size();
    std::vector<std::vector<std::optional<double>>> phi(k, std::vector<std::optional<double>>(k));
    std::vector<std::vector<double>> align(k, std::vector<double>(k));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            try {
                phi[a][b] = phi_correlation(runs[a].correct, runs[b].correct);
            } catch (const std::invalid_argument&) {
                phi[a][b].reset();
            }
            align[a][b] = mean_state_alignment(runs[a].trajectories, runs[b].trajectories);
        }
    }

    Output out{o.out};
    auto& csv = out.stream();
    csv << "run_a,run_b,phi,alignment\n";
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b)
            csv << runs[a].name << ',' << runs[b].name << ',' << csv_value(phi[a][b]) << ','
                << csv_value(align[a][b]) << '\n';
    }

    json j;
    j["runs"] = json::array();
    j["correctness"] = json::object();
    for (const auto& r : runs) {
        j["runs"].push_back(r.name);
        json v = json::array();
        for (bool c : r.correct)
            v.push_back(c ? 1 : 0);
        j["correctness"][r.name] = std::move(v);
    }
    j["phi"] = json::array();
    j["alignment"] = json::array();
    for (std::size_t a = 0; a < k; ++a) {
        json prow = json::array();
        for (const auto& v : phi[a])
            prow.push_back(v ? json(*v) : json(nullptr));
        j["phi"].push_back(std::move(prow));
        j["alignment"].push_back(align[a]);
    }
    if (!o.out.empty() && o.out != "-") {
        const auto dot = o.out.rfind('.');
        const auto base = dot == std::string::npos || dot < o.out.find_last_of('/') + 1 ? o.out : o.out.substr(0, dot);
        std::ofstream{base + ".json"} << std::setw(2) << j << '\n';
    } else {
        std::cout << std::setw(2) << j << '\n';
    }
    write_manifest(o.out, "metrics", args,
                   {{"runs", o.runs}, {"problems", o.problems}, {"all_strategies", o.all_strategies}});
    return kExitOk;
}

int cmd_star_filter(const Options& o, const std::vector<std::string>& args)
{
    const auto records = load_records(o.rollouts);
    const auto problems = problems_for(records, o.problems);
    std::vector<Rollout> rollouts;
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto r = to_rollout(records[i]);
        r.problem = problems[i];
        rollouts.push_back(std::move(r));
    }
    StarFilterOptions opts;
    opts.goal = goal_rule(o.all_used);
    opts.require_clean = o.require_clean;
    const auto kept = star_filter(rollouts, opts);
    Output out{o.out};
    for (const auto& r : kept)
        out.stream() << to_json_line(r) << '\n';
    std::cerr << "kept " << kept.size() << " of " << records.size() << " rollouts\n";
    write_manifest(o.out, "star-filter", args,
                   {{"rollouts", o.rollouts},
                    {"problems", o.problems},
                    {"require_clean", o.require_clean},
                    {"require_all_used", o.all_used}});
    return kExitOk;
}

int cmd_stats(const Options& o)
{
    const auto records = load_records(o.input);
    if (records.empty())
        throw DataError(0, "dataset is empty");
    std::size_t correct = 0;
    std::vector<double> explored;
    std::map<std::string, std::pair<std::size_t, std::size_t>> by_strategy;
    std::map<std::string, std::size_t> by_split;
    for (const auto& r : records) {
        correct += r.correct;
        if (r.correct)
            explored.push_back(static_cast<double>(r.states_explored));
        auto& s = by_strategy[r.strategy.empty() ? "-" : r.strategy];
        ++s.first;
        s.second += r.correct;
        ++by_split[std::string{to_string(r.problem.split)}];
    }
    json j;
    j["records"] = records.size();
    j["correct"] = correct;
    j["accuracy"] = interval_json(wilson_interval(correct, records.size()));
    j["states_explored"] = explored.empty() ? json(nullptr) : interval_json(mean_interval(explored));
    j["strategies"] = json::object();
    for (const auto& [name, counts] : by_strategy)
        j["strategies"][name] = {{"records", counts.first},
                                 {"correct", counts.second},
                                 {"accuracy", static_cast<double>(counts.second) / static_cast<double>(counts.first)}};
    j["splits"] = by_split;
    Output out{o.out};
    out.stream() << std::setw(2) << j << '\n';
    return kExitOk;
}

json difficulty_json(const Problem& p, GoalRule goal)
{
    DifficultyMask mask = 0;
    const auto& strategies = all_strategies();
    json solved = json::array();
    for (std::size_t i = 0; i < strategies.size(); ++i) {
        auto cfg = strategies[i];
        cfg.goal = goal;
        if (run_strategy(cfg, p).correct()) {
            mask |= static_cast<DifficultyMask>(1u << i);
            solved.push_back(strategy_name(cfg));
        }
    }
    const bool solvable = solve_exhaustive(p, goal).solvable;
    std::ostringstream hex;
    hex << "0x" << std::hex << std::setw(3) << std::setfill('0') << mask;
    return {{"target", p.target},     {"nums", p.inputs},        {"mask", mask},
            {"mask_hex", hex.str()}, {"solved_by", solved},    {"solvable", solvable},
            {"difficult", mask == 0 && solvable}};
}

int cmd_difficulty(const Options& o)
{
    const auto goal = goal_rule(o.all_used);
    if (!o.nums.empty()) {
        std::cout << difficulty_json(Problem{o.target, parse_nums(o.nums), Split::Train}, goal).dump() << '\n';
        return kExitOk;
    }
    if (o.problems.empty())
        throw UsageError("difficulty needs --nums/--target or --problems");
    std::vector<Problem> problems;
    for (const auto& r : load_records(o.problems))
        problems.push_back(r.problem);
    std::vector<std::string> lines(problems.size());
    parallel_for(problems.size(), o.workers, [&](std::size_t i) { lines[i] = difficulty_json(problems[i], goal).dump(); });
    Output out{o.out};
    for (const auto& l : lines)
        out.stream() << l << '\n';
    return kExitOk;
}

int run(std::vector<std::string> args);

int cmd_rerun(const Options& o)
{
    std::ifstream in{o.manifest};
    if (!in)
        throw std::runtime_error("cannot open " + o.manifest);
    json m;
    try {
        m = json::parse(in);
    } catch (const json::exception& e) {
        throw DataError(0, std::string{"bad manifest: "} + e.what());
    }
    if (!m.contains("args") || !m["args"].is_array())
        throw DataError(0, "manifest has no args");
    return run(m["args"].get<std::vector<std::string>>());
}

int run(std::vector<std::string> args)
{
    CLI::App app{"Countdown stream-of-search toolkit"};
    app.set_version_flag("--version", SOS_VERSION);
    app.require_subcommand(1);
    Options o;

    auto add_workers = [&](CLI::App* c) {
        c->add_option("--workers", o.workers, "Worker threads (default: $SOS_WORKERS or all cores)")
            ->check(CLI::PositiveNumber);
    };
    auto add_goal = [&](CLI::App* c) {
        c->add_flag("--require-all-used", o.all_used, "Goal only when every number has been used");
    };

    auto* gp = app.add_subcommand("gen-problems", "Sample distinct solvable problems");
    gp->add_option("--n", o.n, "Number of problems")->required();
    gp->add_option("--seed", o.seed, "Run seed")->required();
    gp->add_option("--split", o.split, "train, val, test_seen_target or test_new_target");
    gp->add_option("--input-count", o.input_count, "Numbers per problem")->check(CLI::Range(2, 6));
    gp->add_option("--out", o.out, "Output JSON-lines file (default stdout)");
    add_workers(gp);

    auto* gd = app.add_subcommand("gen-dataset", "Generate search or optimal-path trajectories");
    gd->add_option("--n", o.n, "Number of records");
    gd->add_option("--seed", o.seed, "Run seed")->required();
    gd->add_option("--condition", o.condition, "sos or op")->check(CLI::IsMember({"sos", "op"}));
    gd->add_option("--format", o.format, "jsonl or txt")->check(CLI::IsMember({"jsonl", "txt"}));
    gd->add_option("--strategy", o.strategy, "Fixed strategy instead of a uniform draw");
    gd->add_option("--problems", o.problems, "Use these problems instead of sampling");
    gd->add_option("--node-budget", o.node_budget, "Stop searches after this many explored operations");
    gd->add_option("--input-count", o.input_count, "Numbers per problem")->check(CLI::Range(2, 6));
    gd->add_option("--out", o.out, "Output file (default stdout)");
    add_workers(gd);
    add_goal(gd);

    auto* so = app.add_subcommand("solve", "Solve one problem and print its trace");
    so->add_option("--nums", o.nums, "Comma-separated inputs, e.g. 74,24,36,44")->required();
    so->add_option("--target", o.target, "Target")->required();
    so->add_option("--strategy", o.strategy, "oracle (default) or a strategy name such as dfs-sum");
    so->add_option("--node-budget", o.node_budget, "Stop after this many explored operations");
    add_goal(so);

    auto* va = app.add_subcommand("validate", "Score trajectories and count errors");
    va->add_option("--rollouts", o.rollouts, "JSON-lines records with trajectories")->required();
    va->add_option("--problems", o.problems, "Index-aligned problems (default: taken from the rollouts)");
    va->add_option("--out", o.out, "Report JSON (default stdout)");
    add_workers(va);
    add_goal(va);

    auto* me = app.add_subcommand("metrics", "Correctness, phi and state-alignment matrices");
    me->add_option("--runs-a", [&](const CLI::results_t& r) { o.runs.insert(o.runs.begin(), r[0]); return true; },
                   "First run");
    me->add_option("--runs-b", [&](const CLI::results_t& r) { o.runs.push_back(r[0]); return true; }, "Second run");
    me->add_option("--runs", [&](const CLI::results_t& r) { o.runs.insert(o.runs.end(), r.begin(), r.end()); return true; },
                   "Further runs")
        ->expected(1, -1);
    me->add_option("--problems", o.problems, "Index-aligned problems");
    me->add_flag("--all-strategies", o.all_strategies, "Run all 12 strategies on --problems");
    me->add_option("--out", o.out, "Matrix CSV; JSON goes next to it");
    add_workers(me);
    add_goal(me);

    auto* sf = app.add_subcommand("star-filter", "Keep correct rollouts for the next training round");
    sf->add_option("--rollouts", o.rollouts, "JSON-lines rollouts")->required();
    sf->add_option("--problems", o.problems, "Index-aligned problems");
    sf->add_option("--out", o.out, "Output JSON-lines (default stdout)");
    sf->add_flag("--require-clean", o.require_clean, "Also drop correct rollouts with any error");
    add_goal(sf);

    auto* st = app.add_subcommand("stats", "Summarize a dataset");
    st->add_option("--in", o.input, "JSON-lines dataset")->required();
    st->add_option("--out", o.out, "Output JSON (default stdout)");

    auto* di = app.add_subcommand("difficulty", "Which strategies solve a problem");
    di->add_option("--nums", o.nums, "Comma-separated inputs");
    di->add_option("--target", o.target, "Target");
    di->add_option("--problems", o.problems, "JSON-lines problems");
    di->add_option("--out", o.out, "Output JSON-lines (default stdout)");
    add_workers(di);
    add_goal(di);

    auto* rr = app.add_subcommand("rerun", "Re-run the command recorded in a manifest");
    rr->add_option("--manifest", o.manifest, "Manifest JSON")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gp)
            return cmd_gen_problems(o, args);
        if (*gd)
            return cmd_gen_dataset(o, args);
        if (*so)
            return cmd_solve(o);
        if (*va)
            return cmd_validate(o, args);
        if (*me)
            return cmd_metrics(o, args);
        if (*sf)
            return cmd_star_filter(o, args);
        if (*st)
            return cmd_stats(o);
        if (*di)
            return cmd_difficulty(o);
        if (*rr)
            return cmd_rerun(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv)
{
    return run(std::vector<std::string>(argv + 1, argv + argc));
}
