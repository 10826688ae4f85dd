#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>

#include "lcs.hpp"

using namespace hp;

namespace {

// Independent oracle: maximum over all subsequence masks of S.
int64_t brute_lcs(const std::string& S, const std::string& T) {
    int64_t best = 0;
    for (uint32_t mask = 0; mask < (1u << S.size()); ++mask) {
        std::string sub;
        for (size_t i = 0; i < S.size(); ++i)
            if (mask & (1u << i)) sub += S[i];
        // is sub a subsequence of T?
        size_t p = 0;
        for (char c : T)
            if (p < sub.size() && c == sub[p]) ++p;
        if (p == sub.size()) best = std::max<int64_t>(best, sub.size());
    }
    return best;
}

std::string random_ternary(std::mt19937_64& rng, size_t len) {
    std::string s;
    for (size_t i = 0; i < len; ++i) s += char('0' + rng() % 3);
    return s;
}

void check_witness(const std::string& S, const std::string& T, const LcsWitness& w) {
    CHECK(w.length == static_cast<int64_t>(w.pairs.size()));
    int64_t pi = 0, pj = 0;
    for (auto [i, j] : w.pairs) {
        CHECK(i > pi);
        CHECK(j > pj);
        REQUIRE(i >= 1);
        REQUIRE(i <= static_cast<int64_t>(S.size()));
        REQUIRE(j >= 1);
        REQUIRE(j <= static_cast<int64_t>(T.size()));
        CHECK(S[i - 1] == T[j - 1]);
        pi = i;
        pj = j;
    }
}

}  // namespace

TEST_CASE("edge cases") {
    CHECK(lcs("", "").length == 0);
    CHECK(lcs("012", "").length == 0);
    CHECK(lcs("", "012").length == 0);
    CHECK(lcs("012012", "012012").length == 6);
    CHECK(lcs("000", "111").length == 0);
    CHECK(lcs("0", "0").length == 1);
}

TEST_CASE("matches the subsequence-enumeration oracle with valid witnesses") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 500; ++it) {
        std::string S = random_ternary(rng, rng() % 9);
        std::string T = random_ternary(rng, rng() % 9);
        auto w = lcs(S, T);
        CHECK(w.length == brute_lcs(S, T));
        check_witness(S, T, w);
    }
}

TEST_CASE("symmetric in length") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 200; ++it) {
        std::string S = random_ternary(rng, rng() % 9);
        std::string T = random_ternary(rng, rng() % 9);
        CHECK(lcs(S, T).length == lcs(T, S).length);
    }
}
