#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace predsched {

/// Interval with integral endpoints on a path graph: (start, end) occupies
/// the edges start..end-1, so two intervals that share only a vertex, such
/// as (0,2) and (2,4), do not conflict.
struct Interval {
    std::int64_t start = 0;
    std::int64_t end = 1;

    Interval() = default;
    Interval(std::int64_t s, std::int64_t e) : start(s), end(e) {
        if (s < 0 || e <= s)
            throw std::invalid_argument("interval requires 0 <= start < end, got (" +
                                        std::to_string(s) + "," + std::to_string(e) + ")");
    }

    std::int64_t length() const { return end - start; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.start == b.start && a.end == b.end;
    }
    friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }
};

/// Canonical order: (end, start). A set sorted this way is already in
/// earliest-finish-time processing order.
struct IntervalOrder {
    bool operator()(const Interval& a, const Interval& b) const {
        if (a.end != b.end) return a.end < b.end;
        return a.start < b.start;
    }
};

/// True iff the intervals share at least one edge. Symmetric; touching at a
/// single vertex is not an overlap.
inline bool overlaps(const Interval& a, const Interval& b) {
    return a.start < b.end && b.start < a.end;
}

/// Duplicate-free interval collection kept sorted by (end, start).
/// Requests and predictions are sets: a textual repeat of an interval in an
/// arrival sequence is still a single set member.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> items);

    bool contains(const Interval& x) const;

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const std::vector<Interval>& items() const { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    friend bool operator==(const IntervalSet& a, const IntervalSet& b) {
        return a.items_ == b.items_;
    }
    friend bool operator!=(const IntervalSet& a, const IntervalSet& b) { return !(a == b); }

private:
    std::vector<Interval> items_;
};

IntervalSet union_of(const IntervalSet& a, const IntervalSet& b);
IntervalSet intersection_of(const IntervalSet& a, const IntervalSet& b);
IntervalSet difference_of(const IntervalSet& a, const IntervalSet& b);

/// Largest end coordinate in the set; 0 for an empty set.
std::int64_t max_end(const IntervalSet& s);

struct Solution {
    IntervalSet chosen;
    std::int64_t profit = 0;
};

/// True iff no two members share an edge.
bool is_feasible(const IntervalSet& s);

/// Optimal offline solver: earliest finish time first. Ties on end go to the
/// smaller start. The witness matters, not just the profit: the online
/// algorithms plan around exactly this solution.
Solution opt_eft(const IntervalSet& requests);

/// Thrown when the exhaustive oracle is asked for more than it can chew.
class OracleCapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kBruteForceCap = 24;

/// Independent test oracle: exhaustive search over feasible subsets, no EFT
/// shortcuts. Capped at kBruteForceCap requests.
Solution opt_bruteforce(const IntervalSet& requests);

}  // namespace predsched
