#include "predsched/online.hpp"

#include <stdexcept>

namespace predsched {

namespace {
Interval probe(std::int64_t start) { return Interval(start, start + 1); }
}  // namespace

bool DisjointIntervalSet::contains(const Interval& x) const {
    const auto it = members_.find(probe(x.start));
    return it != members_.end() && *it == x;
}

bool DisjointIntervalSet::conflicts(const Interval& x) const {
    auto it = members_.lower_bound(probe(x.start));
    if (it != members_.begin() && overlaps(*std::prev(it), x)) return true;
    return it != members_.end() && it->start < x.end;
}

std::vector<Interval> DisjointIntervalSet::overlapping(const Interval& x) const {
    std::vector<Interval> out;
    auto it = members_.lower_bound(probe(x.start));
    if (it != members_.begin() && overlaps(*std::prev(it), x)) out.push_back(*std::prev(it));
    for (; it != members_.end() && it->start < x.end; ++it) out.push_back(*it);
    return out;
}

void DisjointIntervalSet::insert(const Interval& x) {
    if (conflicts(x)) throw std::logic_error("DisjointIntervalSet: inserting a conflicting interval");
    members_.insert(x);
}

void DisjointIntervalSet::erase(const Interval& x) {
    const auto it = members_.find(probe(x.start));
    if (it == members_.end() || !(*it == x))
        throw std::logic_error("DisjointIntervalSet: erasing a non-member");
    members_.erase(it);
}

std::string OnlineRun::decision_string() const {
    std::string s;
    s.reserve(decisions.size());
    for (const bool d : decisions) s.push_back(d ? 'A' : 'R');
    return s;
}

OnlineRun play(OnlineScheduler& scheduler, IntervalSet prediction,
               const std::vector<Interval>& sequence) {
    OnlineRun run;
    run.prediction = std::move(prediction);
    run.sequence = sequence;
    run.decisions.reserve(sequence.size());

    DisjointIntervalSet accepted;
    for (const Interval& request : sequence) {
        const bool accept = scheduler.on_request(request);
        run.decisions.push_back(accept);
        if (accept) accepted.insert(request);  // throws if the scheduler misbehaves
    }
    run.accepted = IntervalSet(accepted.items());
    run.profit = static_cast<std::int64_t>(run.accepted.size());
    return run;
}

bool GreedyScheduler::on_request(const Interval& request) {
    if (accepted_.conflicts(request)) return false;
    accepted_.insert(request);
    return true;
}

TrustScheduler::TrustScheduler(const IntervalSet& prediction)
    : istar_(opt_eft(prediction).chosen) {}

bool TrustScheduler::on_request(const Interval& request) {
    if (!istar_.contains(request)) return false;
    if (accepted_.count(request) != 0) return false;  // repeated arrival
    accepted_.insert(request);
    return true;
}

TrustGreedyScheduler::TrustGreedyScheduler(const IntervalSet& prediction)
    : prediction_(prediction) {
    for (const Interval& x : opt_eft(prediction).chosen) {
        plan_.insert(x);
        replaced_.emplace(x, false);
    }
}

bool TrustGreedyScheduler::on_request(const Interval& request) {
    if (plan_.contains(request)) {
        if (accepted_.count(request) != 0) return false;  // repeated arrival
        accepted_.insert(request);
        return true;
    }
    if (prediction_.contains(request)) return false;  // predicted but not planned

    // Unpredicted request. Accepted intervals are immovable; they are all
    // plan members, so one overlap query covers both checks.
    const std::vector<Interval> blockers = plan_.overlapping(request);
    for (const Interval& b : blockers)
        if (accepted_.count(b) != 0) return false;

    if (blockers.size() > 1) return false;
    if (blockers.size() == 1) {
        const Interval& out = blockers.front();
        if (out.end < request.end) return false;
        plan_.erase(out);
        const auto flag = replaced_.find(out);
        if (flag != replaced_.end()) flag->second = true;
    }
    plan_.insert(request);
    accepted_.insert(request);
    return true;
}

OnlineRun run_greedy(const std::vector<Interval>& sequence) {
    GreedyScheduler s;
    return play(s, IntervalSet{}, sequence);
}

OnlineRun run_trust(const IntervalSet& prediction, const std::vector<Interval>& sequence) {
    TrustScheduler s(prediction);
    return play(s, prediction, sequence);
}

OnlineRun run_trustgreedy(const IntervalSet& prediction, const std::vector<Interval>& sequence) {
    TrustGreedyScheduler s(prediction);
    return play(s, prediction, sequence);
}

SchedulerFactory greedy_factory() {
    return [](const IntervalSet&) { return std::make_unique<GreedyScheduler>(); };
}

SchedulerFactory trust_factory() {
    return [](const IntervalSet& prediction) { return std::make_unique<TrustScheduler>(prediction); };
}

SchedulerFactory trustgreedy_factory() {
    return [](const IntervalSet& prediction) {
        return std::make_unique<TrustGreedyScheduler>(prediction);
    };
}

SchedulerFactory reject_all_factory() {
    return [](const IntervalSet&) { return std::make_unique<RejectAllScheduler>(); };
}

}  // namespace predsched
