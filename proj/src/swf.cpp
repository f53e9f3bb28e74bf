#include "predsched/swf.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "predsched/rng.hpp"

namespace predsched {

SwfParseResult parse_swf(std::istream& in) {
    SwfParseResult result;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == ';') continue;
        ++result.data_lines;

        std::istringstream fields(line);
        TraceJob job;
        if (!(fields >> job.job_id >> job.submit_time >> job.wait_time >> job.run_time))
            throw SwfFormatError("malformed trace line " + std::to_string(line_no));

        if (job.run_time <= 0 || job.wait_time < 0 || job.submit_time + job.wait_time < 0) {
            ++result.skipped;
            continue;
        }
        result.jobs.push_back(job);
    }
    return result;
}

ExperimentInstance sample_instance(const std::vector<TraceJob>& jobs, std::uint64_t seed) {
    const std::size_t total = jobs.size();
    if (total < 2) throw std::invalid_argument("need at least two jobs to sample an instance");

    std::vector<std::size_t> order(total);
    for (std::size_t i = 0; i < total; ++i) order[i] = i;
    Xoshiro256StarStar rng(seed);
    rng.shuffle(order);

    ExperimentInstance instance;
    instance.seed = seed;
    const std::size_t n = total / 2;
    instance.input_order.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        instance.input_order.push_back(jobs[order[i]].interval());
    instance.input_set = IntervalSet(instance.input_order);

    std::vector<Interval> rest;
    rest.reserve(total - n);
    for (std::size_t i = n; i < total; ++i) rest.push_back(jobs[order[i]].interval());
    // Pool members equal to an arrival would be true positives, not false
    // positives, so they cannot serve as injected errors.
    instance.holdout_pool = difference_of(IntervalSet(std::move(rest)), instance.input_set);
    return instance;
}

std::int64_t max_perturb_d(const ExperimentInstance& instance, PerturbVariant variant) {
    const auto inputs = static_cast<std::int64_t>(instance.input_set.size());
    const auto pool = static_cast<std::int64_t>(instance.holdout_pool.size());
    switch (variant) {
        case PerturbVariant::balanced: return std::min(inputs, pool);
        case PerturbVariant::fn_only: return inputs;
        case PerturbVariant::fp_only: return pool;
    }
    return 0;
}

namespace {

// First d members of the set in a seeded random order. Partial Fisher-Yates
// over the canonical ordering keeps this platform-stable.
std::vector<Interval> draw(const IntervalSet& from, std::int64_t d, Xoshiro256StarStar& rng) {
    std::vector<Interval> items(from.begin(), from.end());
    rng.shuffle(items);
    items.resize(static_cast<std::size_t>(d));
    return items;
}

}  // namespace

IntervalSet perturb(const ExperimentInstance& instance, std::int64_t d, PerturbVariant variant,
                    std::uint64_t seed) {
    if (d < 0 || d > max_perturb_d(instance, variant))
        throw std::invalid_argument("perturbation size d out of range");

    Xoshiro256StarStar rng(seed);
    IntervalSet prediction = instance.input_set;
    if (variant == PerturbVariant::balanced || variant == PerturbVariant::fn_only)
        prediction = difference_of(prediction, IntervalSet(draw(instance.input_set, d, rng)));
    if (variant == PerturbVariant::balanced || variant == PerturbVariant::fp_only)
        prediction = union_of(prediction, IntervalSet(draw(instance.holdout_pool, d, rng)));
    return prediction;
}

}  // namespace predsched
