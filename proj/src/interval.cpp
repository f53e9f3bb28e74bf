#include "predsched/interval.hpp"

#include <algorithm>

namespace predsched {

IntervalSet::IntervalSet(std::vector<Interval> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end(), IntervalOrder{});
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool IntervalSet::contains(const Interval& x) const {
    return std::binary_search(items_.begin(), items_.end(), x, IntervalOrder{});
}

IntervalSet union_of(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                   IntervalOrder{});
    return IntervalSet(std::move(out));
}

IntervalSet intersection_of(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                          IntervalOrder{});
    return IntervalSet(std::move(out));
}

IntervalSet difference_of(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                        IntervalOrder{});
    return IntervalSet(std::move(out));
}

std::int64_t max_end(const IntervalSet& s) {
    // Members are sorted by (end, start), so the back has the largest end.
    return s.empty() ? 0 : s.items().back().end;
}

bool is_feasible(const IntervalSet& s) {
    // Sorted by end: feasibility is a single sweep.
    std::int64_t frontier = 0;
    bool first = true;
    for (const Interval& x : s) {
        if (!first && x.start < frontier) return false;
        frontier = x.end;
        first = false;
    }
    return true;
}

Solution opt_eft(const IntervalSet& requests) {
    std::vector<Interval> chosen;
    std::int64_t frontier = -1;
    for (const Interval& x : requests) {
        if (chosen.empty() || x.start >= frontier) {
            chosen.push_back(x);
            frontier = x.end;
        }
    }
    Solution s;
    s.chosen = IntervalSet(std::move(chosen));
    s.profit = static_cast<std::int64_t>(s.chosen.size());
    return s;
}

namespace {

// Plain include/exclude search. The size bound only discards branches that
// cannot beat the incumbent, so the maximum is exact. Deliberately does not
// reuse any EFT logic.
void bruteforce_search(const std::vector<Interval>& items, std::size_t idx,
                       std::vector<Interval>& current, std::vector<Interval>& best) {
    if (current.size() + (items.size() - idx) <= best.size()) return;
    if (idx == items.size()) {
        if (current.size() > best.size()) best = current;
        return;
    }
    const Interval& cand = items[idx];
    bool fits = true;
    for (const Interval& taken : current) {
        if (overlaps(taken, cand)) {
            fits = false;
            break;
        }
    }
    if (fits) {
        current.push_back(cand);
        bruteforce_search(items, idx + 1, current, best);
        current.pop_back();
    }
    bruteforce_search(items, idx + 1, current, best);
}

}  // namespace

Solution opt_bruteforce(const IntervalSet& requests) {
    if (requests.size() > kBruteForceCap)
        throw OracleCapacityError("opt_bruteforce capped at " + std::to_string(kBruteForceCap) +
                                  " intervals, got " + std::to_string(requests.size()));
    std::vector<Interval> current;
    std::vector<Interval> best;
    bruteforce_search(requests.items(), 0, current, best);
    Solution s;
    s.chosen = IntervalSet(std::move(best));
    s.profit = static_cast<std::int64_t>(s.chosen.size());
    return s;
}

}  // namespace predsched
