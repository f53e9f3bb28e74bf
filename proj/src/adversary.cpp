#include "predsched/adversary.hpp"

#include <memory>
#include <stdexcept>

namespace predsched {

namespace {

// Serves requests to a scheduler, records the transcript, and holds the
// scheduler to the model's rules: an accept that overlaps an earlier accept
// is a scheduler bug and throws.
class ServeGuard {
public:
    ServeGuard(OnlineScheduler& scheduler, DuelTranscript& transcript)
        : scheduler_(scheduler), transcript_(transcript) {}

    bool operator()(std::int64_t phase, const Interval& request) {
        const bool accepted = scheduler_.on_request(request);
        transcript_.served.push_back({phase, request, accepted});
        if (accepted) accepted_.insert(request);
        return accepted;
    }

private:
    OnlineScheduler& scheduler_;
    DuelTranscript& transcript_;
    DisjointIntervalSet accepted_;
};

}  // namespace

std::string bound_kind_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::thm2: return "thm2";
        case BoundKind::thm4: return "thm4";
        case BoundKind::thm5: return "thm5";
        case BoundKind::prop6: return "prop6";
        case BoundKind::sigma: return "sigma";
    }
    return "?";
}

std::vector<Interval> DuelTranscript::served_sequence() const {
    std::vector<Interval> seq;
    seq.reserve(served.size());
    for (const ServedRecord& r : served) seq.push_back(r.request);
    return seq;
}

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Served sets are compared against the prediction with the ordinary
// classifier, so eta and gamma in a transcript always come from the same
// code path the rest of the library uses.
void finalize(DuelTranscript& t) {
    const IntervalSet served_set{t.served_sequence()};
    t.opt_profit = opt_eft(served_set).profit;
    const ErrorBreakdown b = classify(served_set, t.prediction);
    t.eta = b.eta;
    t.gamma = b.gamma;
    t.gamma_undefined = b.gamma_undefined;
    std::int64_t profit = 0;
    for (const ServedRecord& r : t.served) profit += r.accepted ? 1 : 0;
    t.algorithm_profit = profit;
}

}  // namespace

DuelTranscript duel_theorem4(const SchedulerFactory& factory, const Rational& epsilon,
                             std::int64_t ell) {
    if (epsilon <= Rational(0) || epsilon >= Rational(1))
        throw std::invalid_argument("epsilon must lie strictly between 0 and 1");
    const std::int64_t c = ceil_div(epsilon.den(), epsilon.num());
    const std::int64_t p = ceil_div(epsilon.den() * epsilon.den(), epsilon.num() * epsilon.num());
    if (ell < 0 || ell > p) throw std::invalid_argument("ell must lie in [0, p]");

    std::vector<Interval> predicted;
    for (std::int64_t i = 0; i < p; ++i) {
        predicted.emplace_back(c * i, c * (i + 1));
        predicted.emplace_back(c * i, c * i + 1);
    }

    DuelTranscript t;
    t.bound_kind = BoundKind::thm4;
    t.prediction = IntervalSet(std::move(predicted));

    const auto scheduler = factory(t.prediction);
    ServeGuard serve(*scheduler, t);

    for (std::int64_t i = 0; i < p; ++i) {
        const Interval opener(c * i, c * (i + 1));
        if (i < ell) {
            if (serve(i, opener)) {
                for (std::int64_t j = 0; j < c; ++j) serve(i, Interval(c * i + j, c * i + j + 1));
            }
            // A rejection ends the phase: the predicted unit goes unserved.
        } else {
            serve(i, opener);
            serve(i, Interval(c * i, c * i + 1));
        }
    }

    finalize(t);
    t.bound_satisfied = t.algorithm_profit <= t.opt_profit - t.eta && t.opt_profit >= p;
    return t;
}

DuelTranscript duel_theorem5(const Rational& epsilon, std::int64_t ell) {
    if (epsilon <= Rational(0) || epsilon > Rational(1))
        throw std::invalid_argument("epsilon must lie in (0, 1]");
    const std::int64_t p = ceil_div(epsilon.den(), epsilon.num());
    if (ell < 0 || ell > p) throw std::invalid_argument("ell must lie in [0, p]");

    std::vector<Interval> predicted;
    for (std::int64_t i = 0; i < p; ++i) {
        predicted.emplace_back(3 * i, 3 * i + 2);
        predicted.emplace_back(3 * i + 1, 3 * i + 3);
    }

    DuelTranscript t;
    t.bound_kind = BoundKind::thm5;
    t.prediction = IntervalSet(std::move(predicted));

    // The construction is aimed at Trust: it withholds whichever pair member
    // Trust planned, making it a false positive.
    TrustScheduler trust(t.prediction);
    const IntervalSet& istar = trust.planned_solution();
    ServeGuard serve(trust, t);

    for (std::int64_t i = 0; i < p; ++i) {
        const Interval left(3 * i, 3 * i + 2);
        const Interval right(3 * i + 1, 3 * i + 3);
        if (i < ell) {
            if (istar.contains(left)) {
                serve(i, right);
                serve(i, Interval(3 * i, 3 * i + 1));
            } else {
                serve(i, left);
                serve(i, Interval(3 * i + 2, 3 * i + 3));
            }
        } else {
            serve(i, left);
            serve(i, right);
        }
    }

    finalize(t);
    t.bound_satisfied = t.algorithm_profit == p - ell && t.opt_profit == p + ell && t.eta == ell;
    return t;
}

DuelTranscript duel_prop6(const SchedulerFactory& factory, std::int64_t p, std::int64_t m) {
    if (p < 1) throw std::invalid_argument("p must be at least 1");
    if (m < p) throw std::invalid_argument("m must be at least p");
    const std::int64_t len = m / p;

    std::vector<Interval> predicted;
    for (std::int64_t i = 0; i < p; ++i) predicted.emplace_back(i * len, (i + 1) * len);

    DuelTranscript t;
    t.bound_kind = BoundKind::prop6;
    t.prediction = IntervalSet(std::move(predicted));

    const auto scheduler = factory(t.prediction);
    ServeGuard serve(*scheduler, t);

    std::vector<std::int64_t> taken;
    for (std::int64_t i = 0; i < p; ++i)
        if (serve(i, Interval(i * len, (i + 1) * len))) taken.push_back(i);
    for (const std::int64_t i : taken)
        for (std::int64_t j = 0; j < len; ++j) serve(i, Interval(i * len + j, i * len + j + 1));

    finalize(t);
    const auto accepted_count = static_cast<std::int64_t>(taken.size());
    t.bound_satisfied = t.algorithm_profit <= accepted_count &&
                        t.opt_profit >= accepted_count * len + (p - accepted_count);
    return t;
}

std::vector<Interval> sigma_family(std::int64_t r) {
    if (r < 0) throw std::invalid_argument("r must be non-negative");
    const std::int64_t m_prime = std::int64_t{1} << (r + 1);
    std::vector<Interval> sigma;
    sigma.reserve((std::size_t{2} << (r + 1)) - 1);
    for (std::int64_t i = 0; i <= r + 1; ++i) {
        const std::int64_t len = m_prime >> i;
        for (std::int64_t a = 0; a < m_prime; a += len) sigma.emplace_back(a, a + len);
    }
    return sigma;
}

}  // namespace predsched
