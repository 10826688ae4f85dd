#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "solver.hpp"

using namespace hp;

namespace {

Strand bin(const char* t) { return Strand::parse(Alphabet::binary(), t); }

Strand random_binary(std::mt19937_64& rng, int64_t len) {
    std::string t;
    for (int64_t i = 0; i < len; ++i) t += char('0' + (rng() & 1));
    return bin(t.c_str());
}

}  // namespace

TEST_CASE("base cases") {
    CHECK(hdd(bin("0101"), bin("01"), Semantics::Modified).distance == 1);
    CHECK(hdd(bin("0101"), bin("0101"), Semantics::Modified).distance == 0);
    CHECK(hdd(bin("01"), bin("10"), Semantics::Modified).distance == kUnreachable);
    CHECK(hdd(bin(""), bin(""), Semantics::Modified).distance == 0);
    CHECK(hdd(bin("01"), bin(""), Semantics::Modified).distance == kUnreachable);
}

TEST_CASE("hcd mirrors hdd with swapped arguments") {
    Strand big = bin("010101"), small = bin("01");
    CHECK(hcd(small, big, Semantics::Modified).distance ==
          hdd(big, small, Semantics::Modified).distance);
}

TEST_CASE("witnesses replay to a goal occurrence with length == distance") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 400; ++it) {
        Strand x = random_binary(rng, 2 + static_cast<int64_t>(rng() % 11));
        int64_t i = 1 + static_cast<int64_t>(rng() % x.size());
        int64_t j = i + static_cast<int64_t>(rng() % (x.size() - i + 1));
        Strand y = x.substr(i, j);
        for (Semantics sem : {Semantics::Modified, Semantics::Original}) {
            auto res = hdd(x, y, sem);
            if (!res.reachable()) continue;
            CHECK(static_cast<int64_t>(res.witness.size()) == res.distance);
            SubstringState end = replay_path(x, res.start, res.witness, sem);
            CHECK(end == res.goal);
            CHECK(x.substr(end.i, end.j) == y);
        }
    }
}

TEST_CASE("BFS distance equals the iterative-deepening oracle") {
    std::mt19937_64 rng(22);
    for (int it = 0; it < 150; ++it) {
        Strand x = random_binary(rng, 2 + static_cast<int64_t>(rng() % 9));
        for (int64_t i = 1; i <= x.size(); ++i) {
            for (int64_t j = i; j <= x.size(); ++j) {
                Strand y = x.substr(i, j);
                for (Semantics sem : {Semantics::Modified, Semantics::Original}) {
                    int64_t fast = hdd(x, y, sem).distance;
                    int64_t cap = fast == kUnreachable ? 5 : fast;
                    int64_t slow = brute_force_hdd(x, y, sem, cap);
                    CHECK(fast == slow);
                }
            }
        }
    }
}

TEST_CASE("state_distance between explicit views") {
    Strand host = bin("010101");
    auto res = state_distance(host, {1, 6}, {3, 4}, Semantics::Modified);
    CHECK(res.distance == 2);
    CHECK_THROWS_AS(state_distance(host, {0, 6}, {1, 2}, Semantics::Modified),
                    PreconditionViolated);
}

TEST_CASE("a window containing the goal preserves the distance") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 300; ++it) {
        Strand x = random_binary(rng, 4 + static_cast<int64_t>(rng() % 9));
        int64_t i = 1 + static_cast<int64_t>(rng() % x.size());
        int64_t j = i + static_cast<int64_t>(rng() % (x.size() - i + 1));
        auto open = state_distance(x, {1, x.size()}, {i, j}, Semantics::Modified);
        auto fenced = state_distance(x, {1, x.size()}, {i, j}, Semantics::Modified,
                                     PruneWindow{i, j});
        // the window only discards states that cannot contain the goal view
        CHECK(open.distance == fenced.distance);
    }
}

TEST_CASE("budget exhaustion raises BudgetExceeded with a count") {
    Strand x = bin("01010101010101010101");
    try {
        hdd(x, bin("01"), Semantics::Modified, {}, SearchLimits{3});
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.states_expanded >= 3);
    }
}

TEST_CASE("multiple goal occurrences: the nearest one wins") {
    // "0101" -> "01": occurrences at 1 and 3; one deletion reaches (3,4)
    auto res = hdd(bin("0101"), bin("01"), Semantics::Modified);
    CHECK(res.distance == 1);
    CHECK(res.goal == SubstringState{3, 4});
}

TEST_CASE("stats are populated") {
    auto res = hdd(bin("01010101"), bin("01"), Semantics::Modified);
    CHECK(res.stats.states_expanded > 0);
    CHECK(res.stats.frontier_peak > 0);
    CHECK(res.stats.wall_time_ms >= 0.0);
}
