#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <vector>

#include "predsched/rational.hpp"

namespace predsched {

/// Request on a collection of disjoint 8-leaf stars: a pair of distinct
/// leaves of one star. The only path between two leaves runs through the
/// center, so two requests conflict iff they are on the same star and share
/// a leaf. Requests touching a center are excluded from the model.
struct StarRequest {
    std::int64_t star = 0;
    int leaf_a = 0;  // 1..8, leaf_a < leaf_b
    int leaf_b = 0;

    StarRequest() = default;
    StarRequest(std::int64_t s, int a, int b);

    friend bool operator==(const StarRequest& x, const StarRequest& y) {
        return x.star == y.star && x.leaf_a == y.leaf_a && x.leaf_b == y.leaf_b;
    }
    friend bool operator<(const StarRequest& x, const StarRequest& y) {
        if (x.star != y.star) return x.star < y.star;
        if (x.leaf_a != y.leaf_a) return x.leaf_a < y.leaf_a;
        return x.leaf_b < y.leaf_b;
    }
};

bool conflicts(const StarRequest& x, const StarRequest& y);

/// Exhaustive maximum conflict-free subset; the witness is deterministic
/// (include-first search over the canonical order).
struct StarSolution {
    std::vector<StarRequest> chosen;
    std::int64_t profit = 0;
};
StarSolution star_opt_bruteforce(const std::vector<StarRequest>& requests);

/// Optimal conflict-free subset across many stars. Requests on different
/// stars never conflict, so the instance decomposes into one exhaustive
/// solve per star.
StarSolution star_opt_decomposed(const std::vector<StarRequest>& requests);

class StarScheduler {
public:
    virtual ~StarScheduler() = default;
    virtual bool on_request(const StarRequest& request) = 0;
};

class StarGreedyScheduler final : public StarScheduler {
public:
    bool on_request(const StarRequest& request) override;

private:
    std::vector<StarRequest> accepted_;
};

class StarTrustScheduler final : public StarScheduler {
public:
    explicit StarTrustScheduler(const std::vector<StarRequest>& prediction);
    bool on_request(const StarRequest& request) override;

private:
    std::set<StarRequest> istar_;
    std::set<StarRequest> accepted_;
};

/// Plan-repairing variant on stars. Displacement has no "ends no earlier"
/// analogue here, so an unpredicted request may displace any single
/// non-accepted plan member it conflicts with; the plan never shrinks.
class StarTrustGreedyScheduler final : public StarScheduler {
public:
    explicit StarTrustGreedyScheduler(const std::vector<StarRequest>& prediction);
    bool on_request(const StarRequest& request) override;

private:
    std::set<StarRequest> prediction_;
    std::set<StarRequest> plan_;
    std::set<StarRequest> accepted_;
};

using StarSchedulerFactory =
    std::function<std::unique_ptr<StarScheduler>(const std::vector<StarRequest>&)>;

StarSchedulerFactory star_greedy_factory();
StarSchedulerFactory star_trust_factory();
StarSchedulerFactory star_trustgreedy_factory();
StarSchedulerFactory star_reject_all_factory();

struct StarServedRecord {
    StarRequest request;
    bool accepted = false;
};

struct StarPhaseStats {
    std::int64_t alg = 0;
    std::int64_t opt = 0;
    std::int64_t eta = 0;
    bool bound_holds = false;  // alg <= opt - 2*eta, plus the per-star range checks
};

struct StarDuelTranscript {
    std::vector<StarRequest> prediction;
    std::vector<StarServedRecord> served;
    std::vector<StarPhaseStats> per_star;
    std::int64_t algorithm_profit = 0;
    std::int64_t opt_profit = 0;
    std::int64_t eta = 0;
    Rational gamma;
    bool gamma_undefined = false;
    bool bound_satisfied = false;
};

/// Adaptive adversary on p disjoint stars. The first ell stars play the
/// case analysis that forces alg_i <= opt_i - 2 with one unit of error; the
/// remaining stars serve exactly the prediction. Per-star optima and error
/// are recomputed by brute force; stars share no edges, so totals are sums.
StarDuelTranscript duel_star(const StarSchedulerFactory& factory, std::int64_t ell,
                             std::int64_t p);

}  // namespace predsched
