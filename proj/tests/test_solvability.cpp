#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "core/solvability.hpp"

using namespace revsim;

namespace {

PebbleConfig cfg(int T, int n, const std::vector<int>& occ) {
    return PebbleConfig::with_occupied(T, n, occ);
}

PebbleConfig from_mask(int T, int n, std::uint64_t mask) {
    std::vector<int> occ;
    for (int i = 1; i <= T; ++i)
        if ((mask >> (i - 1)) & 1) occ.push_back(i);
    return cfg(T, n, occ);
}

}  // namespace

TEST_CASE("available pebbles see another pebble within 2^f to the left") {
    CHECK(available_pebbles(cfg(1, 1, {1})) == std::vector<int>{1});
    // f = 0: node 3 sees node 2 at distance 1, node 2 sees nothing within 1.
    CHECK(available_pebbles(cfg(3, 2, {2, 3})) == std::vector<int>{3});
    // f = 1: nearest pebble (node 0) is 3 > 2 away.
    CHECK(available_pebbles(cfg(4, 2, {3})).empty());
}

TEST_CASE("weak solvability with removal-order witness") {
    const SolveResult empty = is_weakly_solvable(PebbleConfig(4, 2));
    CHECK(empty.solvable);
    CHECK(empty.removal_order.empty());

    const SolveResult r = is_weakly_solvable(cfg(3, 2, {2, 3}));
    CHECK(r.solvable);
    CHECK(r.removal_order == std::vector<int>{3, 2});

    CHECK_FALSE(is_weakly_solvable(cfg(4, 2, {3})).solvable);
}

TEST_CASE("strong solvability oracle") {
    CHECK(is_strongly_solvable_exhaustive(PebbleConfig(4, 2)));
    CHECK(is_strongly_solvable_exhaustive(cfg(3, 2, {2, 3})));
    // No pebble removable at all, board non-empty.
    CHECK_FALSE(is_strongly_solvable_exhaustive(cfg(4, 2, {3})));
}

TEST_CASE("check_numbering follows the rank condition") {
    CHECK(check_numbering(cfg(3, 2, {2, 3}), Numbering{{3, 0}, {2, 1}}));
    // Node 3's only higher-ranked neighbor is node 0 at distance 3 > 2^1.
    CHECK_FALSE(check_numbering(cfg(3, 2, {2, 3}), Numbering{{2, 0}, {3, 1}}));
    CHECK(check_numbering(cfg(1, 1, {1}), Numbering{{1, 0}}));
    // Malformed numberings are rejected.
    CHECK_FALSE(check_numbering(cfg(3, 2, {2, 3}), Numbering{{2, 0}}));
    CHECK_FALSE(check_numbering(cfg(3, 2, {2, 3}), Numbering{{2, 0}, {3, 0}}));
}

TEST_CASE("realizability basics") {
    CHECK(is_realizable(cfg(3, 2, {2, 3})));
    CHECK_FALSE(is_realizable(cfg(4, 2, {3})));
    CHECK(is_realizable(PebbleConfig(5, 0)));
}

TEST_CASE("enumerate_reachable on tiny games") {
    const ReachableSet tiny = enumerate_reachable(1, 1);
    CHECK(tiny.configs == std::vector<std::uint64_t>{0, 1});

    const ReachableSet r32 = enumerate_reachable(3, 2);
    CHECK(r32.contains(0b110));  // {2,3}
    CHECK(r32.max_node() == 3);  // 2^2 - 1

    // Two pebbles can never reach node 4.
    const ReachableSet r42 = enumerate_reachable(4, 2);
    for (std::uint64_t m : r42.configs) CHECK(((m >> 3) & 1) == 0);

    CHECK_THROWS_AS(enumerate_reachable(17, 2), InstanceTooLarge);
}

TEST_CASE("greedy decision agrees with the BFS oracle (small sweep)") {
    for (int T = 1; T <= 8; ++T) {
        for (int n = 0; n <= 3; ++n) {
            const ReachableSet rs = enumerate_reachable(T, n);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << T); ++mask) {
                if (std::popcount(mask) > n) continue;
                const PebbleConfig c = from_mask(T, n, mask);
                CHECK(is_realizable(c) == rs.contains(mask));
            }
        }
    }
}

TEST_CASE("greedy confluence: any tie-breaking succeeds on solvable configs") {
    std::mt19937 rng(99);
    const auto random_pick = [&rng](const std::vector<int>& avail) {
        return static_cast<size_t>(rng() % avail.size());
    };
    const ReachableSet rs = enumerate_reachable(8, 3);
    for (std::uint64_t mask : rs.configs) {
        const PebbleConfig c = from_mask(8, 3, mask);
        for (int trial = 0; trial < 5; ++trial)
            CHECK(is_weakly_solvable_with(c, random_pick).solvable);
    }
}

TEST_CASE("witness removal order induces a valid numbering") {
    const ReachableSet rs = enumerate_reachable(8, 3);
    for (std::uint64_t mask : rs.configs) {
        const PebbleConfig c = from_mask(8, 3, mask);
        const SolveResult r = is_weakly_solvable(c);
        REQUIRE(r.solvable);
        CHECK(check_numbering(c, numbering_from_removal_order(c, r.removal_order)));
    }
}

TEST_CASE("config text format") {
    CHECK(format_config(cfg(3, 2, {2, 3})) == "f=0;occ=2,3");
    CHECK(format_config(PebbleConfig(3, 2)) == "f=2;occ=");
}
