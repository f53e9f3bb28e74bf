#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "predsched/interval.hpp"
#include "support.hpp"

using namespace predsched;

namespace {

// Example instance used across the suites: three disjoint intervals A and
// two bridging intervals B, where B_i overlaps A_i and A_{i+1}.
IntervalSet example_chain() {
    return IntervalSet({{0, 2}, {3, 5}, {6, 8}, {1, 4}, {4, 7}});
}

}  // namespace

TEST_CASE("interval construction validates endpoints") {
    CHECK_THROWS_AS(Interval(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(Interval(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(Interval(-1, 2), std::invalid_argument);
    CHECK(Interval(0, 1).length() == 1);
}

TEST_CASE("overlap is edge sharing, not vertex touching") {
    CHECK_FALSE(overlaps({0, 2}, {2, 4}));
    CHECK(overlaps({0, 2}, {1, 3}));
    CHECK(overlaps({1, 4}, {0, 5}));
    // symmetry
    CHECK(overlaps({0, 5}, {1, 4}));
    CHECK_FALSE(overlaps({2, 4}, {0, 2}));
}

TEST_CASE("interval sets are duplicate-free and canonically ordered") {
    const IntervalSet s({{2, 4}, {0, 2}, {2, 4}, {1, 2}});
    CHECK(s.size() == 3);
    CHECK(s.items() == std::vector<Interval>{{0, 2}, {1, 2}, {2, 4}});
    CHECK(s.contains({0, 2}));
    CHECK_FALSE(s.contains({0, 3}));
}

TEST_CASE("opt_eft basics") {
    CHECK(opt_eft(IntervalSet{}).profit == 0);

    const Solution s = opt_eft(IntervalSet({{0, 2}, {1, 3}, {2, 4}}));
    CHECK(s.profit == 2);
    CHECK(s.chosen == IntervalSet({{0, 2}, {2, 4}}));
}

TEST_CASE("opt_eft on the chain instance picks the disjoint triple") {
    const Solution s = opt_eft(example_chain());
    CHECK(s.profit == 3);
    CHECK(s.chosen == IntervalSet({{0, 2}, {3, 5}, {6, 8}}));
    CHECK(opt_bruteforce(example_chain()).profit == 3);
}

TEST_CASE("opt_eft tie-break: equal ends go to the smaller start") {
    const Solution s = opt_eft(IntervalSet({{1, 3}, {0, 3}, {2, 3}}));
    CHECK(s.profit == 1);
    CHECK(s.chosen.contains({0, 3}));
}

TEST_CASE("opt_bruteforce basics and capacity") {
    CHECK(opt_bruteforce(IntervalSet{}).profit == 0);
    CHECK(opt_bruteforce(IntervalSet({{0, 3}, {1, 2}})).profit == 1);

    std::vector<Interval> too_many;
    for (int i = 0; i < 25; ++i) too_many.emplace_back(i, i + 1);
    CHECK_THROWS_AS(opt_bruteforce(IntervalSet(std::move(too_many))), OracleCapacityError);
}

TEST_CASE("opt_eft agrees with the exhaustive oracle on random sets") {
    Xoshiro256StarStar rng(0x5eed0001);
    for (int iter = 0; iter < 2000; ++iter) {
        const IntervalSet s = testing::random_interval_set(rng, 12, 20);
        const Solution eft = opt_eft(s);
        CHECK(eft.profit == opt_bruteforce(s).profit);
        CHECK(is_feasible(eft.chosen));
        CHECK(eft.profit == static_cast<std::int64_t>(eft.chosen.size()));
    }
}

TEST_CASE("opt_eft is monotone under adding one interval") {
    Xoshiro256StarStar rng(0x5eed0002);
    for (int iter = 0; iter < 500; ++iter) {
        const IntervalSet s = testing::random_interval_set(rng, 10, 16);
        const Interval extra = testing::random_interval(rng, 16);
        std::vector<Interval> grown(s.begin(), s.end());
        grown.push_back(extra);
        CHECK(opt_eft(IntervalSet(std::move(grown))).profit >= opt_eft(s).profit);
    }
}

TEST_CASE("opt_eft is deterministic") {
    Xoshiro256StarStar rng(0x5eed0003);
    for (int iter = 0; iter < 200; ++iter) {
        const IntervalSet s = testing::random_interval_set(rng, 12, 20);
        CHECK(opt_eft(s).chosen == opt_eft(s).chosen);
        std::vector<Interval> reversed(s.begin(), s.end());
        std::reverse(reversed.begin(), reversed.end());
        CHECK(opt_eft(IntervalSet(std::move(reversed))).chosen == opt_eft(s).chosen);
    }
}

TEST_CASE("set algebra") {
    const IntervalSet a({{0, 1}, {1, 2}, {2, 3}});
    const IntervalSet b({{1, 2}, {3, 4}});
    CHECK(union_of(a, b) == IntervalSet({{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
    CHECK(intersection_of(a, b) == IntervalSet({{1, 2}}));
    CHECK(difference_of(a, b) == IntervalSet({{0, 1}, {2, 3}}));
    CHECK(max_end(a) == 3);
    CHECK(max_end(IntervalSet{}) == 0);
}
