#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "predsched/adversary.hpp"
#include "predsched/levels.hpp"
#include "support.hpp"

using namespace predsched;

TEST_CASE("levels for a seven-edge path") {
    const LevelPartition p = build_levels(7);
    CHECK(p.vertex_count == 8);
    CHECK(p.level_count == 3);
    CHECK(p.edges_of_level(1) == std::vector<Interval>{{3, 4}});
    CHECK(p.edges_of_level(2) == std::vector<Interval>{{1, 2}, {5, 6}});
    CHECK(p.edges_of_level(3) == std::vector<Interval>{{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    CHECK_THROWS_AS(p.edges_of_level(4), std::invalid_argument);
    CHECK(p.level_of({2, 6}) == 1);
    CHECK(p.level_of({0, 2}) == 2);
    CHECK(p.level_of({6, 7}) == 3);
}

TEST_CASE("single edge path has one level") {
    const LevelPartition p = build_levels(1);
    CHECK(p.vertex_count == 2);
    CHECK(p.level_count == 1);
    CHECK(p.edges_of_level(1) == std::vector<Interval>{{0, 1}});
    CHECK(p.level_of({0, 1}) == 1);
}

TEST_CASE("level edge sets partition the extended line") {
    for (const std::int64_t m : {1, 2, 3, 7, 8, 13, 31, 64}) {
        const LevelPartition p = build_levels(m);
        CAPTURE(m);
        std::vector<Interval> all;
        for (int i = 1; i <= p.level_count; ++i) {
            const auto edges = p.edges_of_level(i);
            CHECK(static_cast<std::int64_t>(edges.size()) == (std::int64_t{1} << (i - 1)));
            all.insert(all.end(), edges.begin(), edges.end());
        }
        CHECK(static_cast<std::int64_t>(IntervalSet(all).size()) == p.vertex_count - 1);

        // Every interval on the extended line gets exactly one level, and it
        // is the smallest level whose edge set it hits.
        const std::int64_t top = p.vertex_count - 1;
        for (std::int64_t a = 0; a < top; ++a) {
            for (std::int64_t b = a + 1; b <= top; ++b) {
                const Interval x(a, b);
                int expected = 0;
                for (int i = 1; i <= p.level_count && expected == 0; ++i)
                    for (const Interval& e : p.edges_of_level(i))
                        if (x.start <= e.start && e.end <= x.end) {
                            expected = i;
                            break;
                        }
                CHECK(p.level_of(x) == expected);
            }
        }
    }
}

TEST_CASE("crs serves only its level, greedily") {
    const OnlineRun run = run_crs(7, {{2, 6}, {3, 5}}, 1);
    CHECK(run.decision_string() == "AR");  // both level 1, they overlap

    // A level with no matching request scores nothing.
    CHECK(run_crs(7, {{2, 6}, {3, 5}}, 3).profit == 0);
}

TEST_CASE("crs expectation enumerates the level coin") {
    CHECK(crs_expected(7, {}) == Rational(0));
    CHECK(crs_expected(7, {{2, 6}}) == Rational(1, 3));
}

TEST_CASE("crs on the halving family") {
    // With the extended-line construction, level 1 and level 2 both catch a
    // chain of nested intervals and keep only the earliest one; every deeper
    // level i catches 2^(i-2) disjoint intervals.
    const auto sigma = sigma_family(2);
    const std::int64_t m = 8;
    const LevelPartition p = build_levels(m);
    CHECK(p.level_count == 4);
    CHECK(run_crs(m, sigma, 1).profit == 1);
    CHECK(run_crs(m, sigma, 2).profit == 1);
    CHECK(run_crs(m, sigma, 3).profit == 2);
    CHECK(run_crs(m, sigma, 4).profit == 4);
    CHECK(crs_expected(m, sigma) == Rational(2));

    for (std::int64_t r = 0; r <= 6; ++r) {
        const auto family = sigma_family(r);
        const std::int64_t edges = std::int64_t{1} << (r + 1);
        const LevelPartition levels = build_levels(edges);
        const std::int64_t opt = opt_eft(IntervalSet(family)).profit;
        CHECK(crs_expected(edges, family) >= Rational(opt, levels.level_count));
    }
}

TEST_CASE("crs expected lower bound on random sequences") {
    Xoshiro256StarStar rng(0x5eed0301);
    for (int iter = 0; iter < 200; ++iter) {
        const std::int64_t m = 1 + static_cast<std::int64_t>(rng.bounded(30));
        const IntervalSet pool = testing::random_interval_set(rng, 12, m);
        const auto seq = testing::shuffled_sequence(pool, rng);
        const std::int64_t opt = opt_eft(pool).profit;
        const int levels = build_levels(m).level_count;
        CHECK(crs_expected(m, seq) >= Rational(opt, levels));
    }
}

TEST_CASE("robusttrust mixes the two branches exactly") {
    const IntervalSet input({{0, 2}, {3, 5}, {6, 8}});
    const std::vector<Interval> seq = {{0, 2}, {3, 5}, {6, 8}};
    const std::int64_t m = 8;

    SUBCASE("alpha one is the trustgreedy branch") {
        const MixtureOutcome out = robusttrust_expected(input, seq, Rational(1), m);
        CHECK(out.expected_profit == Rational(3));
        CHECK(out.trust_branch_profit == 3);
    }
    SUBCASE("alpha zero is the crs branch") {
        const MixtureOutcome out = robusttrust_expected(input, seq, Rational(0), m);
        CHECK(out.expected_profit == out.crs_branch_expected);
        CHECK(out.crs_branch_expected == crs_expected(m, seq));
    }
    SUBCASE("perfect prediction meets the consistency floor for any alpha") {
        for (const auto& alpha : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4),
                                  Rational(1)}) {
            const MixtureOutcome out = robusttrust_expected(input, seq, alpha, m);
            CHECK(out.expected_profit >= alpha * Rational(3));
            CHECK(out.expected_profit ==
                  alpha * Rational(out.trust_branch_profit) +
                      (Rational(1) - alpha) * out.crs_branch_expected);
        }
    }
    SUBCASE("alpha outside [0,1] is rejected") {
        CHECK_THROWS_AS(robusttrust_expected(input, seq, Rational(3, 2), m),
                        std::invalid_argument);
    }
}
