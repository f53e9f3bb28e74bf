// predsched: command line front end for the interval scheduling library.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 a duel transcript
// failed its bound check (a red flag worth a bug report, not a crash).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "predsched/adversary.hpp"
#include "predsched/errors.hpp"
#include "predsched/levels.hpp"
#include "predsched/online.hpp"
#include "predsched/star.hpp"
#include "predsched/sweep.hpp"

namespace {

using json = nlohmann::json;
using namespace predsched;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitBoundViolation = 3;

class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<Interval> read_interval_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::vector<Interval> intervals;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::int64_t start = 0, end = 0;
        if (!(fields >> start >> end))
            throw DataError(path + ":" + std::to_string(line_no) + ": expected 'start end'");
        try {
            intervals.emplace_back(start, end);
        } catch (const std::invalid_argument& e) {
            throw DataError(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return intervals;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");
    return out;
}

int cmd_solve(const std::string& input_path) {
    const Solution solution = opt_eft(IntervalSet(read_interval_file(input_path)));
    std::cout << "profit " << solution.profit << "\n";
    for (const Interval& x : solution.chosen) std::cout << x.start << ' ' << x.end << "\n";
    return kExitOk;
}

int cmd_error(const std::string& input_path, const std::string& prediction_path) {
    const IntervalSet input(read_interval_file(input_path));
    const IntervalSet prediction(read_interval_file(prediction_path));
    const ErrorBreakdown b = classify(input, prediction);
    // gamma_den 0 encodes an undefined gamma (empty input).
    std::cout << b.tp.size() << ' ' << b.fp.size() << ' ' << b.fn.size() << ' ' << b.eta << ' '
              << b.opt_input << ' ' << (b.gamma_undefined ? 0 : b.gamma.num()) << ' '
              << (b.gamma_undefined ? 0 : b.gamma.den()) << "\n";
    return kExitOk;
}

struct SimulateOptions {
    std::string algo;
    std::string input_path;
    std::string prediction_path;
    std::string alpha = "1/2";
    int level = 0;           // 0: average over all levels
    std::int64_t m = 0;      // 0: derive from the data
};

int cmd_simulate(const SimulateOptions& opt) {
    const std::vector<Interval> sequence = read_interval_file(opt.input_path);
    const IntervalSet prediction(opt.prediction_path.empty()
                                     ? std::vector<Interval>{}
                                     : read_interval_file(opt.prediction_path));
    std::int64_t m = opt.m;
    if (m == 0) {
        for (const Interval& x : sequence) m = std::max(m, x.end);
        m = std::max<std::int64_t>(m, max_end(prediction));
        m = std::max<std::int64_t>(m, 1);
    }

    const auto print_run = [](const OnlineRun& run) {
        std::cout << "profit " << run.profit << "\n";
        std::cout << "decisions " << run.decision_string() << "\n";
        return kExitOk;
    };

    if (opt.algo == "greedy") return print_run(run_greedy(sequence));
    if (opt.algo == "trust") return print_run(run_trust(prediction, sequence));
    if (opt.algo == "trustgreedy") return print_run(run_trustgreedy(prediction, sequence));
    if (opt.algo == "crs") {
        if (opt.level > 0) return print_run(run_crs(m, sequence, opt.level));
        std::cout << "expected_profit " << crs_expected(m, sequence).str() << "\n";
        return kExitOk;
    }
    if (opt.algo == "robusttrust") {
        const MixtureOutcome out =
            robusttrust_expected(prediction, sequence, Rational::parse(opt.alpha), m);
        std::cout << "expected_profit " << out.expected_profit.str() << "\n";
        std::cout << "trust_branch " << out.trust_branch_profit << "\n";
        std::cout << "crs_branch " << out.crs_branch_expected.str() << "\n";
        return kExitOk;
    }
    throw CLI::ValidationError("--algo", "unknown algorithm '" + opt.algo + "'");
}

std::map<std::string, std::string> parse_params(const std::string& text) {
    std::map<std::string, std::string> params;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--params", "expected k=v, got '" + item + "'");
        params[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return params;
}

std::string require_param(const std::map<std::string, std::string>& params,
                          const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end()) throw CLI::ValidationError("--params", "missing '" + key + "'");
    return it->second;
}

json transcript_summary(const DuelTranscript& t) {
    json summary = {
        {"type", "summary"},
        {"construction", bound_kind_name(t.bound_kind)},
        {"algorithm_profit", t.algorithm_profit},
        {"opt_profit", t.opt_profit},
        {"eta", t.eta},
        {"bound_satisfied", t.bound_satisfied},
    };
    summary["gamma"] = t.gamma_undefined ? json() : json(t.gamma.str());
    return summary;
}

int cmd_duel(const std::string& construction, const std::string& algo, const std::string& params_text,
             const std::string& out_path) {
    const auto params = parse_params(params_text);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file = open_output(out_path);
        out = &file;
    }

    if (construction == "thm2") {
        StarSchedulerFactory factory;
        if (algo == "greedy") factory = star_greedy_factory();
        else if (algo == "trust") factory = star_trust_factory();
        else if (algo == "trustgreedy") factory = star_trustgreedy_factory();
        else if (algo == "rejectall") factory = star_reject_all_factory();
        else throw CLI::ValidationError("--algo", "unknown star algorithm '" + algo + "'");

        const StarDuelTranscript t = duel_star(factory, std::stoll(require_param(params, "ell")),
                                               std::stoll(require_param(params, "p")));
        for (const StarServedRecord& r : t.served) {
            const json record = {{"type", "request"},
                                 {"star", r.request.star},
                                 {"leaf_a", r.request.leaf_a},
                                 {"leaf_b", r.request.leaf_b},
                                 {"decision", r.accepted ? "A" : "R"}};
            *out << record.dump() << "\n";
        }
        json summary = {{"type", "summary"},       {"construction", "thm2"},
                        {"algorithm_profit", t.algorithm_profit},
                        {"opt_profit", t.opt_profit},
                        {"eta", t.eta},            {"bound_satisfied", t.bound_satisfied}};
        summary["gamma"] = t.gamma_undefined ? json() : json(t.gamma.str());
        *out << summary.dump() << "\n";
        return t.bound_satisfied ? kExitOk : kExitBoundViolation;
    }

    SchedulerFactory factory;
    if (algo == "greedy") factory = greedy_factory();
    else if (algo == "trust") factory = trust_factory();
    else if (algo == "trustgreedy") factory = trustgreedy_factory();
    else if (algo == "rejectall") factory = reject_all_factory();
    else throw CLI::ValidationError("--algo", "unknown algorithm '" + algo + "'");

    DuelTranscript t;
    if (construction == "thm4") {
        t = duel_theorem4(factory, Rational::parse(require_param(params, "epsilon")),
                          std::stoll(require_param(params, "ell")));
    } else if (construction == "thm5") {
        t = duel_theorem5(Rational::parse(require_param(params, "epsilon")),
                          std::stoll(require_param(params, "ell")));
    } else if (construction == "prop6") {
        t = duel_prop6(factory, std::stoll(require_param(params, "p")),
                       std::stoll(require_param(params, "m")));
    } else {
        throw CLI::ValidationError("--construction", "unknown construction '" + construction + "'");
    }

    for (const ServedRecord& r : t.served) {
        const json record = {{"type", "request"},
                             {"phase", r.phase},
                             {"interval", {r.request.start, r.request.end}},
                             {"decision", r.accepted ? "A" : "R"}};
        *out << record.dump() << "\n";
    }
    *out << transcript_summary(t).dump() << "\n";
    return t.bound_satisfied ? kExitOk : kExitBoundViolation;
}

int cmd_ingest(const std::string& swf_path, const std::string& out_path) {
    std::ifstream in(swf_path);
    if (!in) throw DataError("cannot open '" + swf_path + "'");
    SwfParseResult parsed;
    try {
        parsed = parse_swf(in);
    } catch (const SwfFormatError& e) {
        throw DataError(swf_path + ": " + e.what());
    }

    std::ofstream out = open_output(out_path);
    std::int64_t max_length = 0;
    double total_length = 0;
    for (const TraceJob& job : parsed.jobs) {
        const Interval x = job.interval();
        out << x.start << ' ' << x.end << "\n";
        max_length = std::max(max_length, x.length());
        total_length += static_cast<double>(x.length());
    }

    const json sidecar = {
        {"source", swf_path},
        {"data_lines", parsed.data_lines},
        {"jobs_used", parsed.jobs.size()},
        {"jobs_skipped", parsed.skipped},
        {"max_length", max_length},
        {"avg_length", parsed.jobs.empty() ? 0.0 : total_length / static_cast<double>(parsed.jobs.size())},
    };
    std::ofstream side = open_output(out_path + ".json");
    side << sidecar.dump(2) << "\n";
    std::cout << sidecar.dump(2) << "\n";
    return kExitOk;
}

struct SweepCliOptions {
    SweepConfig config;
    std::string variant = "balanced";
    std::string algos;
    std::string out_path;
    std::string format = "csv";
};

int cmd_sweep(SweepCliOptions& opt) {
    opt.config.variant = parse_variant(opt.variant);
    if (!opt.algos.empty()) {
        opt.config.algorithms.clear();
        std::istringstream in(opt.algos);
        std::string name;
        while (std::getline(in, name, ',')) opt.config.algorithms.push_back(name);
    }

    std::vector<SweepRow> rows;
    try {
        rows = run_sweep(opt.config);
    } catch (const std::invalid_argument&) {
        throw;  // usage-level problem
    } catch (const std::exception& e) {
        throw DataError(e.what());
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!opt.out_path.empty()) {
        file = open_output(opt.out_path);
        out = &file;
    }
    if (opt.format == "jsonl")
        emit_jsonl(rows, *out);
    else
        emit_csv(rows, *out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Online interval scheduling with predictions"};
    app.require_subcommand(1);

    std::string input_path, prediction_path, swf_path, out_path;
    SimulateOptions simulate;
    std::string construction, duel_algo, duel_params, duel_out;
    SweepCliOptions sweep;

    auto* solve = app.add_subcommand("solve", "Optimal offline profit for an interval file");
    solve->add_option("--input", input_path, "interval file, one 'start end' per line")
        ->required();

    auto* simulate_cmd = app.add_subcommand("simulate", "Run one online algorithm over a sequence");
    simulate_cmd->add_option("--algo", simulate.algo, "greedy|trust|trustgreedy|crs|robusttrust")
        ->required();
    simulate_cmd->add_option("--input", simulate.input_path, "arrival sequence file")->required();
    simulate_cmd->add_option("--prediction", simulate.prediction_path, "prediction set file");
    simulate_cmd->add_option("--alpha", simulate.alpha, "mixture weight p/q for robusttrust");
    simulate_cmd->add_option("--level", simulate.level, "fixed level for crs (default: average)");
    simulate_cmd->add_option("--m", simulate.m, "path length in edges (default: from data)");

    auto* error_cmd = app.add_subcommand("error", "Classify a prediction against an input");
    error_cmd->add_option("--input", input_path, "input set file")->required();
    error_cmd->add_option("--prediction", prediction_path, "prediction set file")->required();

    auto* duel = app.add_subcommand("duel", "Run an adaptive lower-bound construction");
    duel->add_option("--construction", construction, "thm2|thm4|thm5|prop6")->required();
    duel->add_option("--algo", duel_algo, "greedy|trust|trustgreedy|rejectall")->required();
    duel->add_option("--params", duel_params, "comma separated k=v, e.g. epsilon=1/2,ell=3");
    duel->add_option("--out", duel_out, "write JSONL here instead of stdout");

    auto* ingest = app.add_subcommand("ingest", "Convert an SWF trace to an interval file");
    ingest->add_option("--swf", swf_path, "SWF trace")->required();
    ingest->add_option("--out", out_path, "output interval file; sidecar goes to <out>.json")
        ->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "Error sweep over a trace");
    sweep_cmd->add_option("--swf", sweep.config.trace_path, "SWF trace")->required();
    sweep_cmd->add_option("--variant", sweep.variant, "balanced|fn_only|fp_only");
    sweep_cmd->add_option("--steps", sweep.config.steps, "grid size over [0, n] (default 1000)");
    sweep_cmd->add_option("--seed", sweep.config.seed, "master seed");
    sweep_cmd->add_option("--algos", sweep.algos,
                          "comma separated subset of opt,greedy,trust,trustgreedy,crs_expected");
    sweep_cmd->add_option("--workers", sweep.config.workers, "parallel row workers (default 1)");
    sweep_cmd->add_option("--out", sweep.out_path, "output file (default stdout)");
    sweep_cmd->add_option("--format", sweep.format, "csv|jsonl");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(input_path);
        if (simulate_cmd->parsed()) return cmd_simulate(simulate);
        if (error_cmd->parsed()) return cmd_error(input_path, prediction_path);
        if (duel->parsed()) return cmd_duel(construction, duel_algo, duel_params, duel_out);
        if (ingest->parsed()) return cmd_ingest(swf_path, out_path);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const SwfFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const OracleCapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
