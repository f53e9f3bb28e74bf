#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "predsched/errors.hpp"
#include "predsched/interval.hpp"
#include "predsched/online.hpp"
#include "predsched/rational.hpp"

namespace predsched {

/// Which lower-bound construction produced a transcript.
enum class BoundKind { thm2, thm4, thm5, prop6, sigma };

std::string bound_kind_name(BoundKind kind);

struct ServedRecord {
    std::int64_t phase = 0;
    Interval request;
    bool accepted = false;
};

/// Full record of one adaptive adversary run. opt_profit and eta are
/// recomputed from the served set (never taken from the construction's
/// bookkeeping), so the transcript doubles as an oracle check on the
/// construction itself.
struct DuelTranscript {
    IntervalSet prediction;
    std::vector<ServedRecord> served;
    std::int64_t algorithm_profit = 0;
    std::int64_t opt_profit = 0;
    std::int64_t eta = 0;
    Rational gamma;
    bool gamma_undefined = false;
    BoundKind bound_kind = BoundKind::thm4;
    bool bound_satisfied = false;

    std::vector<Interval> served_sequence() const;
};

/// General deterministic lower bound. The prediction pairs a long interval
/// with its first unit piece per phase; in the first adaptive phases the
/// adversary floods an accepted long interval with its unit pieces and cuts
/// the phase short after a rejection. Checks ALG <= OPT - eta (equivalently
/// ALG <= (1-gamma)OPT) and OPT >= p, where p = ceil(1/epsilon^2) phases and
/// c = ceil(1/epsilon) pieces per phase.
DuelTranscript duel_theorem4(const SchedulerFactory& factory, const Rational& epsilon,
                             std::int64_t ell);

/// Tightness construction aimed at Trust. The prediction holds p overlapping
/// length-2 pairs; for the first ell pairs the member Trust planned is
/// withheld and the other member plus an adjacent unit interval are served.
/// Checks the exact equalities profit = p - ell, OPT = p + ell, eta = ell.
DuelTranscript duel_theorem5(const Rational& epsilon, std::int64_t ell);

/// Deterministic consistency/robustness trade-off: p disjoint predicted
/// intervals of length floor(m/p); each accepted one is flooded with its
/// unit pieces. Checks profit == number of accepted long intervals and
/// OPT >= accepted * floor(m/p) + (p - accepted).
DuelTranscript duel_prop6(const SchedulerFactory& factory, std::int64_t p, std::int64_t m);

/// Nested halving family: the concatenation of rounds i = 0..r+1, where
/// round i tiles (0, 2^{r+1}) with 2^i disjoint intervals. The prefix ending
/// after round i has optimal profit 2^i.
std::vector<Interval> sigma_family(std::int64_t r);

}  // namespace predsched
