#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qcomb/markoff.hpp"
#include "qcomb/snake.hpp"

using namespace qcomb;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) { return std::vector<BigInt>(v.begin(), v.end()); }

} // namespace

TEST_CASE("Markoff numbers up to a bound") {
    CHECK(markoff_numbers_upto(200) == big({1, 2, 5, 13, 29, 34, 89, 169, 194}));
    CHECK(markoff_numbers_upto(1) == big({1}));
    const auto upto433 = markoff_numbers_upto(433);
    CHECK(upto433.back() == 433);
    CHECK(std::find(upto433.begin(), upto433.end(), BigInt(233)) != upto433.end());
    const auto got = markoff_numbers_upto(5000);
    const auto want = oracle::markoff_bruteforce(5000);
    CHECK(got == std::vector<BigInt>(want.begin(), want.end()));
}

TEST_CASE("Markoff triples") {
    CHECK(MarkoffTriple{1, 5, 13}.valid());
    CHECK_FALSE(MarkoffTriple{1, 5, 12}.valid());
}

TEST_CASE("mu on Christoffel words") {
    CHECK(mu(BinaryWord("00101")) == IMat2{463, 194, 284, 119});
    CHECK(markoff_of(BinaryWord("00101")) == 194);
    CHECK(markoff_of(BinaryWord("0")) == 1);
    CHECK(markoff_of(BinaryWord("01011")) == 433);
    CHECK_THROWS_AS(mu(BinaryWord("0110")), DomainError);
    CHECK_NOTHROW(mu(BinaryWord("0110"), true));
    for (std::size_t n = 1; n <= 10; ++n)
        for (const BinaryWord& w : all_words(n)) {
            if (!is_christoffel(w)) continue;
            const auto m = oracle::mu(w.str());
            CHECK(mu(w) == IMat2{m.a, m.b, m.c, m.d});
        }
}

TEST_CASE("every Christoffel word gives a Markoff number") {
    const auto list = markoff_numbers_upto(BigInt(1) << 40);
    for (std::size_t n = 1; n <= 12; ++n)
        for (const BinaryWord& w : all_words(n))
            if (is_christoffel(w)) CHECK(std::binary_search(list.begin(), list.end(), markoff_of(w)));
}

TEST_CASE("q-Markoff polynomials") {
    CHECK(q_markoff(BinaryWord("0")).str() == "1");
    CHECK(q_markoff(BinaryWord("1")).str() == "q+1");
    CHECK(q_markoff(BinaryWord("01")).eval_at_one() == 5);
}

TEST_CASE("area formula for q-Markoff numbers") {
    CHECK(markoff_snake_word(BinaryWord("101")).str() == "001100001100");
    CHECK(count_matchings(SnakeGraph(markoff_snake_word(BinaryWord("101")))) == 433);
    CHECK(verify_area_theorem(BinaryWord("101")));
    CHECK(count_matchings(SnakeGraph(markoff_snake_word(BinaryWord("0")))) == 13);
    CHECK(markoff_of(BinaryWord("001")) == 13);
    CHECK(verify_area_theorem(BinaryWord("0")));
    CHECK(count_matchings(SnakeGraph(BinaryWord("001100"))) == 29);
    CHECK(markoff_of(BinaryWord("011")) == 29);
    CHECK(verify_area_theorem(BinaryWord("1")));
    CHECK(verify_area_theorem(BinaryWord("11")));
    CHECK_THROWS_AS(verify_area_theorem(BinaryWord("10")), DomainError);
}
