#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "predsched/rational.hpp"
#include "predsched/swf.hpp"

namespace predsched {

/// Configuration for one error sweep over a trace. The d grid spans [0, n]
/// with `steps` equally spaced values (rounded to integers, deduplicated,
/// clamped to what the trace's deduplicated sets can support).
///
/// `algorithms` selects output columns: the four base columns (opt, greedy,
/// trust, trustgreedy) are always computed; adding "crs_expected" appends
/// the exact expected profit of the randomized level scheduler.
struct SweepConfig {
    std::string trace_path;
    PerturbVariant variant = PerturbVariant::balanced;
    std::int64_t steps = 1000;
    std::uint64_t seed = 0;
    std::vector<std::string> algorithms = {"opt", "greedy", "trust", "trustgreedy"};
    int workers = 1;
};

struct SweepRow {
    std::int64_t d = 0;
    std::int64_t eta = 0;
    Rational gamma;
    bool gamma_undefined = false;
    std::int64_t opt = 0;
    std::int64_t greedy = 0;
    std::int64_t trust = 0;
    std::int64_t trustgreedy = 0;
    bool has_crs = false;
    Rational crs_expected;
};

int variant_tag(PerturbVariant variant);
std::string variant_name(PerturbVariant variant);
PerturbVariant parse_variant(const std::string& name);

/// Runs the sweep. Rows are independent: each derives its own seed from
/// (config.seed, d, variant), so the output is identical for any worker
/// count. Throws std::runtime_error on trace problems, with row context on
/// per-row failures.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// Same rows for a pre-parsed trace; run_sweep's core.
std::vector<SweepRow> run_sweep_on_jobs(const SweepConfig& config,
                                        const std::vector<TraceJob>& jobs);

/// Writes `d,eta,gamma_num,gamma_den,gamma_float,opt,greedy,trust,
/// trustgreedy[,crs_expected]` with one line per row. Byte-deterministic:
/// floats use shortest round-trip formatting, expected profits stay exact as
/// "p/q", and an undefined gamma is encoded as 0/0 with float nan.
void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out);

/// JSON-lines rendering of the same rows.
void emit_jsonl(const std::vector<SweepRow>& rows, std::ostream& out);

/// Shortest round-trip decimal rendering (std::to_chars).
std::string render_double(double value);

}  // namespace predsched
