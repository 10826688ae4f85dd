#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "strand.hpp"

using namespace hp;

namespace {

Strand bin(const char* t) { return Strand::parse(Alphabet::binary(), t); }

Strand random_binary(std::mt19937_64& rng, int64_t len) {
    std::string t;
    for (int64_t i = 0; i < len; ++i) t += char('0' + (rng() & 1));
    return bin(t.c_str());
}

}  // namespace

TEST_CASE("alphabets are fixed-point-free involutions") {
    for (const Alphabet* a : {&Alphabet::binary(), &Alphabet::quad()}) {
        CHECK(a->size() % 2 == 0);
        for (Symbol s = 0; s < a->size(); ++s) {
            CHECK(a->inv(a->inv(s)) == s);
            CHECK(a->inv(s) != s);
        }
    }
    CHECK(Alphabet::binary().size() == 2);
    CHECK(Alphabet::quad().size() == 4);
}

TEST_CASE("quad symbol 2-bar prints as 3 and inverts 2") {
    const Alphabet& q = Alphabet::quad();
    CHECK(q.to_char(q.inv(q.from_char('2'))) == '3');
    CHECK(q.inv(q.from_char('0')) == q.from_char('1'));
}

TEST_CASE("parse/text round trip and parse errors") {
    CHECK(bin("0100110").text() == "0100110");
    CHECK(Strand::parse(Alphabet::quad(), "21210303").text() == "21210303");
    CHECK_THROWS_AS(bin("012"), ParseError);
    CHECK_THROWS_AS(Strand::parse(Alphabet::quad(), "4"), ParseError);
}

TEST_CASE("complement examples") {
    CHECK(complement(bin("01")).text() == "10");
    CHECK(complement(bin("")).text() == "");
    CHECK(complement(bin("000")).text() == "111");
}

TEST_CASE("reverse complement examples") {
    CHECK(reverse_complement(bin("01")).text() == "01");
    CHECK(reverse_complement(bin("00")).text() == "11");
    CHECK(reverse_complement(bin("0100")).text() == "1101");
}

TEST_CASE("reverse complement is an involution") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 200; ++it) {
        Strand s = random_binary(rng, static_cast<int64_t>(rng() % 30));
        CHECK(reverse_complement(reverse_complement(s)) == s);
        for (int64_t k = 1; k <= s.size(); ++k)
            CHECK(reverse_complement(s).at(k) == s.inv_at(s.size() - k + 1));
    }
}

TEST_CASE("1-based access, substr, concatenation, repeat") {
    Strand s = bin("01001");
    CHECK(s.size() == 5);
    CHECK(s.at(1) == 0);
    CHECK(s.at(5) == 1);
    CHECK(s.inv_at(1) == 1);
    CHECK(s.substr(2, 4).text() == "100");
    CHECK(s.substr(3, 2).empty());  // empty range
    CHECK((s + bin("11")).text() == "0100111");
    CHECK(bin("01").repeat(3).text() == "010101");
    CHECK(bin("01").repeat(0).empty());
}

TEST_CASE("count_symbol") {
    Strand s = bin("010011");
    CHECK(count_symbol(s, 0) == 3);
    CHECK(count_symbol(s, 1) == 3);
}

TEST_CASE("find_occurrences") {
    Strand hay = bin("0101010");
    CHECK(find_occurrences(hay, bin("010")) == std::vector<int64_t>{1, 3, 5});
    CHECK(find_occurrences(hay, bin("11")).empty());
    // empty needle occurs at every boundary
    CHECK(find_occurrences(bin("01"), bin("")) == std::vector<int64_t>{1, 2, 3});
    CHECK(find_occurrences(bin(""), bin("0")).empty());
}

TEST_CASE("strand equality requires the same alphabet") {
    Strand b = bin("01");
    Strand q = Strand::parse(Alphabet::quad(), "01");
    CHECK(b.text() == q.text());
    CHECK(!(b == q));
}
