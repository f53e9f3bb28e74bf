#pragma once

// Shared fuzz helpers for the test suites. Everything is driven by the
// pinned library RNG so failures replay from a seed.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "predsched/interval.hpp"
#include "predsched/rng.hpp"

namespace predsched::testing {

inline Interval random_interval(Xoshiro256StarStar& rng, std::int64_t m,
                                std::int64_t max_len = 0) {
    const std::int64_t start = static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(m)));
    const std::int64_t room = m - start;
    const std::int64_t cap = max_len > 0 ? std::min(max_len, room) : room;
    const std::int64_t len = 1 + static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(cap)));
    return Interval(start, start + len);
}

inline IntervalSet random_interval_set(Xoshiro256StarStar& rng, std::size_t max_n,
                                       std::int64_t m) {
    const std::size_t n = rng.bounded(max_n + 1);
    std::vector<Interval> items;
    items.reserve(n);
    for (std::size_t i = 0; i < n; ++i) items.push_back(random_interval(rng, m));
    return IntervalSet(std::move(items));
}

/// Input/prediction pair drawn from one shared pool so TP/FP/FN all occur.
struct FuzzPair {
    IntervalSet input;
    IntervalSet prediction;
};

inline FuzzPair random_pair(Xoshiro256StarStar& rng, std::size_t max_n, std::int64_t m) {
    const IntervalSet pool = random_interval_set(rng, 2 * max_n, m);
    std::vector<Interval> input, prediction;
    for (const Interval& x : pool) {
        const std::uint64_t coin = rng.bounded(4);
        if (coin == 0 || coin == 1) input.push_back(x);            // input only / both
        if (coin == 1 || coin == 2) prediction.push_back(x);       // both / prediction only
    }
    while (input.size() > max_n) input.pop_back();
    while (prediction.size() > max_n) prediction.pop_back();
    return {IntervalSet(std::move(input)), IntervalSet(std::move(prediction))};
}

inline std::vector<Interval> shuffled_sequence(const IntervalSet& set, Xoshiro256StarStar& rng) {
    std::vector<Interval> seq(set.begin(), set.end());
    rng.shuffle(seq);
    return seq;
}

/// All permutations of the set's members, for exhaustive arrival-order runs.
inline std::vector<std::vector<Interval>> all_orders(const IntervalSet& set) {
    std::vector<Interval> seq(set.begin(), set.end());
    std::vector<std::vector<Interval>> orders;
    std::sort(seq.begin(), seq.end(), IntervalOrder{});
    do {
        orders.push_back(seq);
    } while (std::next_permutation(seq.begin(), seq.end(), IntervalOrder{}));
    return orders;
}

}  // namespace predsched::testing
