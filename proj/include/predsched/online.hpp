#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "predsched/interval.hpp"

namespace predsched {

/// Pairwise-disjoint intervals with logarithmic conflict queries.
/// Because members never overlap, ordering by start also orders by end, and
/// the members overlapping a probe form one contiguous run.
class DisjointIntervalSet {
public:
    bool contains(const Interval& x) const;
    bool conflicts(const Interval& x) const;
    std::vector<Interval> overlapping(const Interval& x) const;

    void insert(const Interval& x);
    void erase(const Interval& x);

    std::size_t size() const { return members_.size(); }
    std::vector<Interval> items() const { return {members_.begin(), members_.end()}; }

private:
    struct ByStart {
        bool operator()(const Interval& a, const Interval& b) const { return a.start < b.start; }
    };
    std::set<Interval, ByStart> members_;
};

/// Online algorithms see one request at a time and answer accept/reject on
/// the spot. The interface exposes no lookahead, which is what makes replay
/// and adaptive adversaries honest: a decision can only depend on the
/// prediction handed to the constructor and the requests seen so far.
class OnlineScheduler {
public:
    virtual ~OnlineScheduler() = default;
    virtual bool on_request(const Interval& request) = 0;
};

/// Record of one complete run: the arrival order, the per-request decisions
/// and the resulting accepted set. profit == |accepted|.
struct OnlineRun {
    IntervalSet prediction;
    std::vector<Interval> sequence;
    std::vector<bool> decisions;
    IntervalSet accepted;
    std::int64_t profit = 0;

    std::string decision_string() const;  // "A"/"R" per request
};

/// Feeds the sequence to the scheduler and records the outcome. Throws
/// std::logic_error if the scheduler ever accepts a request that overlaps a
/// previously accepted one; decisions are irrevocable, so that is a bug in
/// the scheduler, never a legal outcome.
OnlineRun play(OnlineScheduler& scheduler, IntervalSet prediction,
               const std::vector<Interval>& sequence);

/// Accepts a request iff it does not overlap previously accepted intervals.
class GreedyScheduler final : public OnlineScheduler {
public:
    bool on_request(const Interval& request) override;

private:
    DisjointIntervalSet accepted_;
};

/// Fixes an optimal solution for the prediction up front and accepts exactly
/// the members of that solution as they arrive. A repeated arrival of an
/// already accepted member is rejected.
class TrustScheduler final : public OnlineScheduler {
public:
    explicit TrustScheduler(const IntervalSet& prediction);
    bool on_request(const Interval& request) override;

    const IntervalSet& planned_solution() const { return istar_; }

private:
    IntervalSet istar_;
    std::set<Interval, IntervalOrder> accepted_;
};

/// Keeps a feasible plan initialized to an optimal solution for the
/// prediction and repairs it as unpredicted requests arrive.
///
/// A request r already in the plan is accepted. A predicted request outside
/// the plan is rejected. An unpredicted request is accepted when it overlaps
/// no accepted interval and fits the plan by displacing at most one planned
/// interval that ends no earlier than r; displacing zero is allowed and
/// grows the plan. The plan never shrinks.
class TrustGreedyScheduler final : public OnlineScheduler {
public:
    explicit TrustGreedyScheduler(const IntervalSet& prediction);
    bool on_request(const Interval& request) override;

    std::size_t plan_size() const { return plan_.size(); }
    std::vector<Interval> plan_items() const { return plan_.items(); }
    /// Flags for the initial optimal solution's members: true once an
    /// unpredicted arrival has displaced that member from the plan.
    const std::map<Interval, bool, IntervalOrder>& replaced_flags() const { return replaced_; }

private:
    IntervalSet prediction_;
    DisjointIntervalSet plan_;
    std::set<Interval, IntervalOrder> accepted_;
    std::map<Interval, bool, IntervalOrder> replaced_;
};

/// Strawman that rejects everything; adversary constructions are checked
/// against it alongside the real algorithms.
class RejectAllScheduler final : public OnlineScheduler {
public:
    bool on_request(const Interval&) override { return false; }
};

OnlineRun run_greedy(const std::vector<Interval>& sequence);
OnlineRun run_trust(const IntervalSet& prediction, const std::vector<Interval>& sequence);
OnlineRun run_trustgreedy(const IntervalSet& prediction, const std::vector<Interval>& sequence);

/// Builds a fresh scheduler for a given prediction; adversary duels use this
/// to interrogate an algorithm through the causal interface only.
using SchedulerFactory = std::function<std::unique_ptr<OnlineScheduler>(const IntervalSet&)>;

SchedulerFactory greedy_factory();
SchedulerFactory trust_factory();
SchedulerFactory trustgreedy_factory();
SchedulerFactory reject_all_factory();

}  // namespace predsched
