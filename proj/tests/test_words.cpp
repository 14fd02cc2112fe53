#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qcomb/core.hpp"
#include "qcomb/words.hpp"

using namespace qcomb;

TEST_CASE("parse and basic accessors") {
    const BinaryWord w("0110");
    CHECK(w.size() == 4);
    CHECK(w[1] == 1);
    CHECK(w.count(1) == 2);
    CHECK(w.prefix(2).str() == "01");
    CHECK(w.suffix_from(3).str() == "0");
    CHECK(BinaryWord::parse("e").empty());
    CHECK(BinaryWord::parse("eps").empty());
    CHECK(BinaryWord::parse("").empty());
    CHECK_THROWS_AS(BinaryWord::parse("012"), ParseError);
}

TEST_CASE("complement, reversal and hat") {
    CHECK(complement(BinaryWord("")).str().empty());
    CHECK(complement(BinaryWord("0111")).str() == "1000");
    CHECK(complement(BinaryWord("0001")).str() == "1110");
    CHECK(reversal(BinaryWord("011")).str() == "110");
    CHECK(hat(BinaryWord("01")).str() == "01");
    CHECK(hat(BinaryWord("001")).str() == "011");
}

TEST_CASE("theta flips letters at even distance from the right end") {
    CHECK(theta(BinaryWord("0111")).str() == "0010");
    CHECK(theta(BinaryWord("1101100")).str() == "0111001");
    CHECK(theta(BinaryWord("011001011001")).str() == "001100001100");
}

TEST_CASE("eta flips letters at even positions from the left") {
    CHECK(eta(BinaryWord("")).str().empty());
    CHECK(eta(BinaryWord("0")).str() == "1");
    CHECK(eta(BinaryWord("00")).str() == "10");
}

TEST_CASE("gamma morphisms") {
    CHECK(gamma(BinaryWord("010")).str() == "00011000");
    CHECK(gamma_prime(BinaryWord("01")).str() == "101100");
    CHECK(gamma(BinaryWord("")).empty());
}

TEST_CASE("Christoffel words") {
    CHECK(christoffel(1, 1).str() == "01");
    CHECK(christoffel(2, 1).str() == "001");
    CHECK(christoffel(3, 2).str() == "00101");
    CHECK(is_christoffel(BinaryWord("01011")));
    CHECK_FALSE(is_christoffel(BinaryWord("0110")));
    CHECK(is_christoffel(BinaryWord("0")));
    CHECK(is_christoffel(BinaryWord("1")));
    CHECK_FALSE(is_proper_christoffel(BinaryWord("0")));
    CHECK(is_proper_christoffel(BinaryWord("01")));
}

TEST_CASE("Christoffel recogniser agrees with the standard-factorisation closure") {
    const auto closure = oracle::christoffel_closure(14);
    for (std::size_t n = 1; n <= 14; ++n)
        for (const BinaryWord& w : all_words(n)) CHECK_MESSAGE(is_christoffel(w) == (closure.count(w.str()) == 1), w.str());
}

TEST_CASE("involution laws and the theta/eta conjugacy") {
    for (std::size_t n = 0; n <= 12; ++n)
        for (const BinaryWord& w : all_words(n)) {
            CHECK(complement(complement(w)) == w);
            CHECK(reversal(reversal(w)) == w);
            CHECK(hat(hat(w)) == w);
            CHECK(theta(theta(w)) == w);
            CHECK(eta(eta(w)) == w);
            CHECK(hat(theta(w)) == eta(hat(w)));
        }
}

TEST_CASE("all_words enumerates 2^n distinct words") {
    for (std::size_t n = 0; n <= 10; ++n) {
        const auto ws = all_words(n);
        CHECK(ws.size() == (std::size_t{1} << n));
        CHECK(std::set<BinaryWord>(ws.begin(), ws.end()).size() == ws.size());
    }
}
