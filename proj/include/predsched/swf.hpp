#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <vector>

#include "predsched/interval.hpp"

namespace predsched {

/// One usable job from a Standard Workload Format trace. The derived
/// request is the half-open interval from actual start (submit + wait) to
/// finish (start + run).
struct TraceJob {
    std::int64_t job_id = 0;
    std::int64_t submit_time = 0;
    std::int64_t wait_time = 0;
    std::int64_t run_time = 0;

    Interval interval() const {
        const std::int64_t start = submit_time + wait_time;
        return Interval(start, start + run_time);
    }
};

class SwfFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SwfParseResult {
    std::vector<TraceJob> jobs;
    std::int64_t skipped = 0;      // dropped: run_time <= 0, wait_time < 0, or negative start
    std::int64_t data_lines = 0;   // non-comment, non-blank lines seen
};

/// Parses SWF text: `;` starts a comment line; data lines carry whitespace
/// separated fields, of which the first four are job id, submit, wait and
/// run time. Jobs that cannot form a valid interval are dropped and counted.
/// Throws SwfFormatError with the line number on malformed lines.
SwfParseResult parse_swf(std::istream& in);

/// One sampled experiment: half the trace, shuffled, is the arrival
/// sequence; the rest (deduplicated against it) is the pool that perturbation
/// draws false positives from. Fully determined by the seed.
struct ExperimentInstance {
    std::vector<Interval> input_order;  // n = floor(N/2) arrivals
    IntervalSet input_set;              // arrivals as a set
    IntervalSet holdout_pool;           // leftover tasks not equal to any arrival
    std::uint64_t seed = 0;
};

ExperimentInstance sample_instance(const std::vector<TraceJob>& jobs, std::uint64_t seed);

enum class PerturbVariant { balanced, fn_only, fp_only };

/// Builds a prediction at error knob d:
///   balanced  - remove d random input intervals, add d random pool intervals
///   fn_only   - remove d random input intervals
///   fp_only   - add d random pool intervals
/// Deterministic under (instance, d, variant, seed).
IntervalSet perturb(const ExperimentInstance& instance, std::int64_t d, PerturbVariant variant,
                    std::uint64_t seed);

/// Largest d that perturb accepts for this variant.
std::int64_t max_perturb_d(const ExperimentInstance& instance, PerturbVariant variant);

}  // namespace predsched
