#include "predsched/levels.hpp"

#include <stdexcept>
#include <utility>

namespace predsched {

int LevelPartition::level_of(const Interval& x) const {
    if (x.end > vertex_count - 1)
        throw std::invalid_argument("interval does not fit the extended line");
    int level = 1;
    std::int64_t lo = 0;
    std::int64_t width = vertex_count;  // vertices in the current segment
    for (;;) {
        const std::int64_t v = lo + width / 2 - 1;  // middle edge (v, v+1)
        if (x.start <= v && v + 1 <= x.end) return level;
        ++level;
        width /= 2;
        if (x.start >= v + 1) lo = v + 1;  // else stay in the left half
    }
}

std::vector<Interval> LevelPartition::edges_of_level(int level) const {
    if (level < 1 || level > level_count) throw std::invalid_argument("level out of range");
    const std::int64_t width = vertex_count >> (level - 1);  // vertices per segment
    std::vector<Interval> edges;
    edges.reserve(static_cast<std::size_t>(std::int64_t{1} << (level - 1)));
    for (std::int64_t lo = 0; lo < vertex_count; lo += width)
        edges.emplace_back(lo + width / 2 - 1, lo + width / 2);
    return edges;
}

LevelPartition build_levels(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("path length must be at least one edge");
    LevelPartition p;
    p.m = m;
    p.vertex_count = 1;
    p.level_count = 0;
    while (p.vertex_count < m + 1) {
        p.vertex_count *= 2;
        ++p.level_count;
    }
    return p;
}

CrsScheduler::CrsScheduler(LevelPartition levels, int level) : levels_(levels), level_(level) {
    if (level_ < 1 || level_ > levels_.level_count)
        throw std::invalid_argument("level out of range");
}

bool CrsScheduler::on_request(const Interval& request) {
    if (levels_.level_of(request) != level_) return false;
    if (accepted_.conflicts(request)) return false;
    accepted_.insert(request);
    return true;
}

OnlineRun run_crs(std::int64_t m, const std::vector<Interval>& sequence, int level) {
    CrsScheduler s(build_levels(m), level);
    return play(s, IntervalSet{}, sequence);
}

Rational crs_expected(std::int64_t m, const std::vector<Interval>& sequence) {
    const LevelPartition levels = build_levels(m);
    std::int64_t total = 0;
    for (int level = 1; level <= levels.level_count; ++level)
        total += run_crs(m, sequence, level).profit;
    return Rational(total, levels.level_count);
}

MixtureOutcome robusttrust_expected(const IntervalSet& prediction,
                                    const std::vector<Interval>& sequence, const Rational& alpha,
                                    std::int64_t m) {
    if (alpha < Rational(0) || alpha > Rational(1))
        throw std::invalid_argument("alpha must lie in [0, 1]");
    MixtureOutcome out;
    out.alpha = alpha;
    out.trust_branch_profit = run_trustgreedy(prediction, sequence).profit;
    out.crs_branch_expected = crs_expected(m, sequence);
    out.expected_profit =
        alpha * Rational(out.trust_branch_profit) + (Rational(1) - alpha) * out.crs_branch_expected;
    return out;
}

}  // namespace predsched
