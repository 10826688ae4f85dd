#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "hairpin_ops.hpp"

using namespace hp;

namespace {

Strand bin(const char* t) { return Strand::parse(Alphabet::binary(), t); }

Strand random_binary(std::mt19937_64& rng, int64_t len) {
    std::string t;
    for (int64_t i = 0; i < len; ++i) t += char('0' + (rng() & 1));
    return bin(t.c_str());
}

}  // namespace

TEST_CASE("max_arm examples") {
    CHECK(max_arm(bin("0101")) == 2);
    CHECK(max_arm(bin("0110")) == 0);
    CHECK(max_arm(bin("")) == 0);
    CHECK(max_arm(bin("0")) == 0);
    CHECK(max_arm(bin("01")) == 1);
    // view form agrees with the value form
    Strand host = bin("110101");
    CHECK(max_arm(host, 3, 6) == max_arm(bin("0101")));
}

TEST_CASE("valid deletion lengths are side-symmetric and {1..max_arm} under Modified") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 300; ++it) {
        Strand s = random_binary(rng, 2 + static_cast<int64_t>(rng() % 12));
        auto left = valid_deletion_lengths(s, Side::Left, Semantics::Modified);
        auto right = valid_deletion_lengths(s, Side::Right, Semantics::Modified);
        CHECK(left == right);
        std::vector<int64_t> expect;
        for (int64_t l = 1; l <= max_arm(s); ++l) expect.push_back(l);
        CHECK(left == expect);
    }
}

TEST_CASE("Original-semantics valid lengths are a subset of Modified ones") {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 300; ++it) {
        Strand s = random_binary(rng, 2 + static_cast<int64_t>(rng() % 12));
        for (Side side : {Side::Left, Side::Right}) {
            auto orig = valid_deletion_lengths(s, side, Semantics::Original);
            auto mod = valid_deletion_lengths(s, side, Semantics::Modified);
            CHECK(std::includes(mod.begin(), mod.end(), orig.begin(), orig.end()));
            // direct restatement of the boundary constraint
            for (int64_t l = 1; l <= s.size(); ++l) {
                bool expect = l <= max_arm(s) && 2 * l < s.size() &&
                              s.at(l + 1) == s.inv_at(s.size() - l);
                bool got = std::find(orig.begin(), orig.end(), l) != orig.end();
                CHECK(expect == got);
            }
        }
    }
}

TEST_CASE("completion then deletion round-trips, both semantics and sides") {
    std::mt19937_64 rng(9);
    int exercised = 0;
    for (int it = 0; it < 500; ++it) {
        Strand s = random_binary(rng, 1 + static_cast<int64_t>(rng() % 10));
        for (Semantics sem : {Semantics::Modified, Semantics::Original}) {
            for (Side side : {Side::Left, Side::Right}) {
                for (int64_t l = 1; l <= s.size(); ++l) {
                    Strand grown;
                    try {
                        grown = apply_completion(s, side, l, sem);
                    } catch (const InvalidStep&) {
                        continue;
                    }
                    ++exercised;
                    CHECK(grown.size() == s.size() + l);
                    CHECK(apply_deletion(grown, {side, l}, sem) == s);
                }
            }
        }
    }
    CHECK(exercised > 1000);
}

TEST_CASE("deletion then completion restores the original") {
    std::mt19937_64 rng(10);
    for (int it = 0; it < 500; ++it) {
        Strand s = random_binary(rng, 2 + static_cast<int64_t>(rng() % 10));
        for (Semantics sem : {Semantics::Modified, Semantics::Original}) {
            for (Side side : {Side::Left, Side::Right}) {
                for (int64_t l : valid_deletion_lengths(s, side, sem)) {
                    Strand shrunk = apply_deletion(s, {side, l}, sem);
                    CHECK(apply_completion(shrunk, side, l, sem) == s);
                }
            }
        }
    }
}

TEST_CASE("invalid deletions throw") {
    CHECK_THROWS_AS(apply_deletion(bin("0110"), {Side::Left, 1}, Semantics::Modified),
                    InvalidStep);
    // arm would be valid but the Original boundary constraint fails: 2l = n
    CHECK_THROWS_AS(apply_deletion(bin("0101"), {Side::Left, 2}, Semantics::Original),
                    InvalidStep);
    CHECK_NOTHROW(apply_deletion(bin("0101"), {Side::Left, 2}, Semantics::Modified));
}

TEST_CASE("replay_path walks views and reports the failing step") {
    Strand host = bin("010101");
    SubstringState start{1, 6};
    std::vector<DeletionStep> good{{Side::Left, 2}, {Side::Right, 1}};
    SubstringState end = replay_path(host, start, good, Semantics::Modified);
    CHECK(end == SubstringState{3, 5});
    std::vector<DeletionStep> bad{{Side::Left, 2}, {Side::Left, 4}};
    try {
        replay_path(host, start, bad, Semantics::Modified);
        FAIL("expected InvalidStep");
    } catch (const InvalidStep& e) {
        CHECK(e.step_index == 2);
    }
}

TEST_CASE("step text format round trip") {
    std::vector<DeletionStep> steps{{Side::Left, 3}, {Side::Right, 1586}, {Side::Left, 1}};
    std::string text = steps_to_text(steps);
    CHECK(text == "L 3\nR 1586\nL 1\n");
    CHECK(steps_from_text(text) == steps);
    CHECK(steps_from_text("").empty());
    CHECK_THROWS_AS(steps_from_text("L x"), ParseError);
    CHECK_THROWS_AS(steps_from_text("Q 3"), ParseError);
}
