#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "predsched/adversary.hpp"

using namespace predsched;

TEST_CASE("sigma family layout") {
    CHECK(sigma_family(0) == std::vector<Interval>{{0, 2}, {0, 1}, {1, 2}});

    for (std::int64_t r = 0; r <= 5; ++r) {
        const auto sigma = sigma_family(r);
        CHECK(static_cast<std::int64_t>(sigma.size()) == (std::int64_t{4} << r) - 1);

        // Each round tiles (0, m') with disjoint intervals.
        const std::int64_t m_prime = std::int64_t{1} << (r + 1);
        std::size_t at = 0;
        for (std::int64_t i = 0; i <= r + 1; ++i) {
            std::int64_t covered = 0;
            const std::int64_t len = m_prime >> i;
            for (std::int64_t k = 0; k < (std::int64_t{1} << i); ++k, ++at) {
                CHECK(sigma[at].start == covered);
                CHECK(sigma[at].length() == len);
                covered += len;
            }
        }

        // Optimal profit of the prefix through round i is 2^i.
        std::size_t prefix_len = 0;
        for (std::int64_t i = 0; i <= r + 1; ++i) {
            prefix_len += std::size_t{1} << i;
            const std::vector<Interval> prefix(sigma.begin(), sigma.begin() + prefix_len);
            CHECK(opt_eft(IntervalSet(prefix)).profit == (std::int64_t{1} << i));
        }
    }
}

TEST_CASE("thm4 duel parameter checks") {
    CHECK_THROWS_AS(duel_theorem4(greedy_factory(), Rational(1), 0), std::invalid_argument);
    CHECK_THROWS_AS(duel_theorem4(greedy_factory(), Rational(0), 0), std::invalid_argument);
    CHECK_THROWS_AS(duel_theorem4(greedy_factory(), Rational(1, 2), 5), std::invalid_argument);
}

TEST_CASE("thm4 duel with no adaptive phases has zero error") {
    const DuelTranscript t = duel_theorem4(greedy_factory(), Rational(1, 2), 0);
    CHECK(t.eta == 0);
    CHECK(t.bound_satisfied);
    CHECK(t.algorithm_profit <= t.opt_profit);
    CHECK(t.opt_profit >= 4);  // p phases, one disjoint slot each
}

TEST_CASE("thm4 duel floods greedy's accepted openers") {
    // epsilon = 1/2: c = 2, p = 4. Greedy accepts every phase opener, so
    // every adaptive phase serves the unit pieces: ALG_i 1, OPT_i 2, eta_i 1.
    const DuelTranscript t = duel_theorem4(greedy_factory(), Rational(1, 2), 4);
    CHECK(t.algorithm_profit == 4);
    CHECK(t.opt_profit == 8);
    CHECK(t.eta == 4);
    CHECK(t.bound_satisfied);
    CHECK(t.gamma == Rational(1, 2));
}

TEST_CASE("thm4 duel punishes rejection too") {
    // Reject-all: each adaptive phase ends right away with one false
    // positive: ALG_i 0, OPT_i 1, eta_i 1.
    const DuelTranscript t = duel_theorem4(reject_all_factory(), Rational(1, 2), 4);
    CHECK(t.algorithm_profit == 0);
    CHECK(t.opt_profit == 4);
    CHECK(t.eta == 4);
    CHECK(t.bound_satisfied);
}

TEST_CASE("thm4 bound holds for every algorithm on a parameter grid") {
    const std::vector<std::pair<SchedulerFactory, const char*>> algorithms = {
        {greedy_factory(), "greedy"},
        {trust_factory(), "trust"},
        {trustgreedy_factory(), "trustgreedy"},
        {reject_all_factory(), "reject_all"},
    };
    for (const auto& epsilon : {Rational(1, 2), Rational(1, 3), Rational(1, 4)}) {
        const std::int64_t p = (epsilon.den() * epsilon.den() + epsilon.num() * epsilon.num() - 1) /
                               (epsilon.num() * epsilon.num());
        for (std::int64_t ell = 0; ell <= p; ++ell) {
            for (const auto& [factory, name] : algorithms) {
                CAPTURE(name);
                CAPTURE(ell);
                const DuelTranscript t = duel_theorem4(factory, epsilon, ell);
                CHECK(t.bound_satisfied);
                CHECK(t.algorithm_profit <= t.opt_profit - t.eta);
            }
        }
    }
}

TEST_CASE("thm5 duel equalities") {
    SUBCASE("single pair") {
        const DuelTranscript t = duel_theorem5(Rational(1), 1);
        CHECK(t.algorithm_profit == 0);
        CHECK(t.opt_profit == 2);
        CHECK(t.eta == 1);
        CHECK(t.bound_satisfied);
    }
    SUBCASE("error-free case") {
        const DuelTranscript t = duel_theorem5(Rational(1, 4), 0);
        CHECK(t.algorithm_profit == 4);
        CHECK(t.opt_profit == 4);
        CHECK(t.eta == 0);
        CHECK(t.bound_satisfied);
    }
    SUBCASE("half the pairs flipped") {
        const DuelTranscript t = duel_theorem5(Rational(1, 4), 2);
        CHECK(t.algorithm_profit == 2);
        CHECK(t.opt_profit == 6);
        CHECK(t.eta == 2);
        CHECK(t.gamma == Rational(1, 3));
        CHECK(t.bound_satisfied);
    }
    SUBCASE("full epsilon-ell grid") {
        for (const auto& epsilon :
             {Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 10)}) {
            const std::int64_t p = (epsilon.den() + epsilon.num() - 1) / epsilon.num();
            for (std::int64_t ell = 0; ell <= p; ++ell) {
                const DuelTranscript t = duel_theorem5(epsilon, ell);
                CAPTURE(ell);
                CHECK(t.algorithm_profit == p - ell);
                CHECK(t.opt_profit == p + ell);
                CHECK(t.eta == ell);
                CHECK(t.bound_satisfied);
            }
        }
    }
}

TEST_CASE("prop6 duel") {
    SUBCASE("greedy swallows the single long interval") {
        const DuelTranscript t = duel_prop6(greedy_factory(), 1, 8);
        CHECK(t.algorithm_profit == 1);
        CHECK(t.opt_profit == 8);
        CHECK(t.bound_satisfied);
    }
    SUBCASE("reject-all sees only the prediction round") {
        const DuelTranscript t = duel_prop6(reject_all_factory(), 2, 8);
        CHECK(t.algorithm_profit == 0);
        CHECK(t.served.size() == 2);
        CHECK(t.opt_profit == 2);
        CHECK(t.bound_satisfied);
    }
    SUBCASE("trust accepts both planned intervals") {
        const DuelTranscript t = duel_prop6(trust_factory(), 2, 8);
        CHECK(t.algorithm_profit == 2);
        CHECK(t.opt_profit == 8);
        CHECK(t.bound_satisfied);
    }
    SUBCASE("parameter checks") {
        CHECK_THROWS_AS(duel_prop6(greedy_factory(), 0, 8), std::invalid_argument);
        CHECK_THROWS_AS(duel_prop6(greedy_factory(), 9, 8), std::invalid_argument);
    }
}
