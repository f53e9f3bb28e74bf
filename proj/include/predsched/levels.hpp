#pragma once

#include <cstdint>
#include <vector>

#include "predsched/interval.hpp"
#include "predsched/online.hpp"
#include "predsched/rational.hpp"

namespace predsched {

/// Recursive middle-edge partition of a line into interval levels.
///
/// The real path of m edges (vertices 0..m) is extended to the smallest
/// power-of-two vertex count, which makes the extended edge count odd, so
/// every segment in the recursion has a unique middle edge. E_1 is the
/// middle edge of the whole extended line; E_{i+1} holds the middle edges of
/// the 2^i segments left after removing E_1..E_i. An interval's level is the
/// smallest i such that it contains an edge of E_i; the levels partition all
/// intervals on the extended line.
struct LevelPartition {
    std::int64_t m = 0;             // real path length in edges
    std::int64_t vertex_count = 0;  // extended line: power of two >= m+1
    int level_count = 0;            // log2(vertex_count)

    int level_of(const Interval& x) const;

    /// E_level as unit intervals, materialized on demand. Level i has
    /// 2^(i-1) middle edges at a fixed stride, so nothing is stored.
    std::vector<Interval> edges_of_level(int level) const;
};

LevelPartition build_levels(std::int64_t m);

/// Classify-and-select: serves one fixed level greedily, rejects the rest.
class CrsScheduler final : public OnlineScheduler {
public:
    CrsScheduler(LevelPartition levels, int level);
    bool on_request(const Interval& request) override;

private:
    LevelPartition levels_;
    int level_;
    DisjointIntervalSet accepted_;
};

OnlineRun run_crs(std::int64_t m, const std::vector<Interval>& sequence, int level);

/// Exact expected profit of the randomized level choice: the only coin picks
/// a level uniformly, so the expectation is the plain average of the
/// per-level runs. No sampling anywhere.
Rational crs_expected(std::int64_t m, const std::vector<Interval>& sequence);

/// Outcome of the two-branch mixture: with probability alpha follow the
/// prediction (TrustGreedy), otherwise ignore it and run the random-level
/// scheduler.
struct MixtureOutcome {
    Rational alpha;
    std::int64_t trust_branch_profit = 0;
    Rational crs_branch_expected;
    Rational expected_profit;
};

MixtureOutcome robusttrust_expected(const IntervalSet& prediction,
                                    const std::vector<Interval>& sequence, const Rational& alpha,
                                    std::int64_t m);

}  // namespace predsched
