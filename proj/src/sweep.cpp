#include "predsched/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "predsched/errors.hpp"
#include "predsched/levels.hpp"
#include "predsched/online.hpp"
#include "predsched/rng.hpp"

namespace predsched {

int variant_tag(PerturbVariant variant) { return static_cast<int>(variant); }

std::string variant_name(PerturbVariant variant) {
    switch (variant) {
        case PerturbVariant::balanced: return "balanced";
        case PerturbVariant::fn_only: return "fn_only";
        case PerturbVariant::fp_only: return "fp_only";
    }
    return "?";
}

PerturbVariant parse_variant(const std::string& name) {
    if (name == "balanced") return PerturbVariant::balanced;
    if (name == "fn_only") return PerturbVariant::fn_only;
    if (name == "fp_only") return PerturbVariant::fp_only;
    throw std::invalid_argument("unknown variant '" + name + "'");
}

namespace {

std::vector<std::int64_t> d_grid(std::int64_t n, std::int64_t steps, std::int64_t d_cap) {
    if (steps < 1) throw std::invalid_argument("steps must be at least 1");
    std::vector<std::int64_t> grid;
    if (steps == 1) {
        grid.push_back(0);
    } else {
        for (std::int64_t k = 0; k < steps; ++k) {
            // round(k*n/(steps-1)) without floating point
            const std::int64_t d = (2 * k * n + (steps - 1)) / (2 * (steps - 1));
            grid.push_back(std::min(d, d_cap));
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

bool wants(const SweepConfig& config, const std::string& name) {
    return std::find(config.algorithms.begin(), config.algorithms.end(), name) !=
           config.algorithms.end();
}

}  // namespace

std::vector<SweepRow> run_sweep_on_jobs(const SweepConfig& config,
                                        const std::vector<TraceJob>& jobs) {
    static const std::vector<std::string> known = {"opt", "greedy", "trust", "trustgreedy",
                                                   "crs_expected"};
    if (config.algorithms.empty()) throw std::invalid_argument("algorithm list must be non-empty");
    for (const std::string& name : config.algorithms)
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw std::invalid_argument("unknown algorithm '" + name + "'");

    const ExperimentInstance instance = sample_instance(jobs, config.seed);
    const auto n = static_cast<std::int64_t>(instance.input_order.size());
    const std::int64_t d_cap = std::min(n, max_perturb_d(instance, config.variant));
    const std::vector<std::int64_t> grid = d_grid(n, config.steps, d_cap);

    // Prediction-independent quantities are computed once and shared.
    const std::int64_t opt = opt_eft(instance.input_set).profit;
    const std::int64_t greedy = run_greedy(instance.input_order).profit;
    const bool with_crs = wants(config, "crs_expected");
    Rational crs;
    if (with_crs) crs = crs_expected(std::max<std::int64_t>(1, max_end(instance.input_set)),
                                     instance.input_order);

    std::vector<SweepRow> rows(grid.size());
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;

    const auto worker = [&]() {
        for (;;) {
            const std::size_t k = cursor.fetch_add(1);
            if (k >= grid.size() || failed.load()) break;
            const std::int64_t d = grid[k];
            try {
                const std::uint64_t row_seed =
                    derive_seed(config.seed, static_cast<std::uint64_t>(d),
                                static_cast<std::uint64_t>(variant_tag(config.variant)));
                const IntervalSet prediction = perturb(instance, d, config.variant, row_seed);
                const ErrorBreakdown breakdown = classify(instance.input_set, prediction);

                SweepRow& row = rows[k];
                row.d = d;
                row.eta = breakdown.eta;
                row.gamma = breakdown.gamma;
                row.gamma_undefined = breakdown.gamma_undefined;
                row.opt = opt;
                row.greedy = greedy;
                row.trust = run_trust(prediction, instance.input_order).profit;
                row.trustgreedy = run_trustgreedy(prediction, instance.input_order).profit;
                row.has_crs = with_crs;
                row.crs_expected = crs;
            } catch (const std::exception& e) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                failed.store(true);
                failure = "row d=" + std::to_string(d) + ": " + e.what();
            }
        }
    };

    const int workers = std::max(1, config.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    if (failed.load()) throw std::runtime_error(failure);
    return rows;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
    std::ifstream in(config.trace_path);
    if (!in) throw std::runtime_error("cannot open trace '" + config.trace_path + "'");
    const SwfParseResult parsed = parse_swf(in);
    return run_sweep_on_jobs(config, parsed.jobs);
}

std::string render_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

namespace {

void render_gamma(const SweepRow& row, std::string& out) {
    if (row.gamma_undefined) {
        out += "0,0,nan";
    } else {
        out += std::to_string(row.gamma.num());
        out += ',';
        out += std::to_string(row.gamma.den());
        out += ',';
        out += render_double(row.gamma.to_double());
    }
}

}  // namespace

void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    const bool with_crs = !rows.empty() && rows.front().has_crs;
    std::string text = "d,eta,gamma_num,gamma_den,gamma_float,opt,greedy,trust,trustgreedy";
    if (with_crs) text += ",crs_expected";
    text += '\n';
    for (const SweepRow& row : rows) {
        text += std::to_string(row.d);
        text += ',';
        text += std::to_string(row.eta);
        text += ',';
        render_gamma(row, text);
        text += ',';
        text += std::to_string(row.opt);
        text += ',';
        text += std::to_string(row.greedy);
        text += ',';
        text += std::to_string(row.trust);
        text += ',';
        text += std::to_string(row.trustgreedy);
        if (with_crs) {
            text += ',';
            text += row.crs_expected.str();
        }
        text += '\n';
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

void emit_jsonl(const std::vector<SweepRow>& rows, std::ostream& out) {
    for (const SweepRow& row : rows) {
        std::string line = "{\"d\":" + std::to_string(row.d);
        line += ",\"eta\":" + std::to_string(row.eta);
        if (row.gamma_undefined) {
            line += ",\"gamma\":null";
        } else {
            line += ",\"gamma\":\"" + row.gamma.str() + "\"";
            line += ",\"gamma_float\":" + render_double(row.gamma.to_double());
        }
        line += ",\"opt\":" + std::to_string(row.opt);
        line += ",\"greedy\":" + std::to_string(row.greedy);
        line += ",\"trust\":" + std::to_string(row.trust);
        line += ",\"trustgreedy\":" + std::to_string(row.trustgreedy);
        if (row.has_crs) line += ",\"crs_expected\":\"" + row.crs_expected.str() + "\"";
        line += "}\n";
        out.write(line.data(), static_cast<std::streamsize>(line.size()));
    }
}

}  // namespace predsched
