#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qcomb/cf.hpp"

using namespace qcomb;

namespace {

std::vector<Rational> rationals(long total) {
    std::vector<Rational> out;
    for (long n = 2; n <= total; ++n)
        for (long r = 1; r < n; ++r)
            if (std::gcd(r, n - r) == 1) out.emplace_back(r, n - r);
    return out;
}

} // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(Rational::parse("3").str() == "3");
    CHECK(Rational::parse("3").fraction_str() == "3/1");
    CHECK_THROWS(Rational::parse("0/3"));
    CHECK_THROWS(Rational::parse("-1/3"));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("even and odd expansions") {
    CHECK(cf_even(Rational(22, 7)).str() == "[3;7]");
    CHECK(cf_odd(Rational(22, 7)).str() == "[3;6,1]");
    CHECK(cf_even(Rational(4, 5)).str() == "[0;1,3,1]");
    CHECK(cf_even(Rational(1)).str() == "[0;1]");
    CHECK(CFExpansion::parse("[2;2,2]").str() == "[2;2,2]");
    CHECK(CFExpansion::parse("[0;1,3,1]").value() == Rational(4, 5));
    CHECK(CFExpansion::parse("2,2,2") == CFExpansion{2, 2, 2});
    CHECK_THROWS(CFExpansion::parse("[2;2"));
    CHECK_THROWS(CFExpansion::parse(""));
    CHECK_THROWS(CFExpansion::parse("[1;0,2]"));
}

TEST_CASE("word codec on the small table") {
    CHECK(word_of(CFExpansion{0, 1, 1, 1}).str() == "01");
    CHECK(word_of(CFExpansion{1, 2}).str() == "10");
    CHECK(word_of(CFExpansion{3, 2, 1, 1}).str() == "111001");
    CHECK(rational_of_word(BinaryWord("")) == Rational(1));
    CHECK(rational_of_word(BinaryWord("11")) == Rational(3));
    CHECK(rational_of_word(BinaryWord("0")) == Rational(1, 2));
}

TEST_CASE("word codec agrees with the Stern-Brocot walk") {
    for (const Rational& x : rationals(60)) {
        const std::string w = oracle::word(to_long(x.num()), to_long(x.den()));
        CHECK(word_of(x).str() == w);
        const auto [p, q] = oracle::stern_brocot_value(w);
        CHECK(Rational(p, q) == x);
        CHECK(rational_of_word(word_of(x)) == x);
        CHECK(cf_even(x).is_even());
        CHECK_FALSE(cf_odd(x).is_even());
        CHECK(cf_odd(x).value() == x);
    }
}

TEST_CASE("tau") {
    CHECK(tau(CFExpansion{0, 1, 3, 1}).str() == "[0;3,1,1]");
    CHECK(word_of(tau(CFExpansion{0, 1, 3, 1})) == hat(BinaryWord("0111")));
    // The formula on [1;1] yields [0;2]; hat of W([1;1]) = "1" is "0" = W(1/2).
    CHECK(tau(CFExpansion{1, 1}).str() == "[0;2]");
    for (const Rational& x : rationals(40)) {
        const CFExpansion a = cf_even(x);
        CHECK(word_of(tau(a)) == hat(word_of(a)));
        CHECK(tau(tau(a)) == a);
    }
}

TEST_CASE("convergents and the integer matrix identity") {
    const auto check = [](const CFExpansion& a, long r, long s) {
        const auto [p, q] = matrix_identity_check(a);
        CHECK(p == r);
        CHECK(q == s);
    };
    check(CFExpansion{0, 1, 3, 1}, 4, 5);
    check(CFExpansion{3, 7}, 22, 7);
    check(CFExpansion{0, 1}, 1, 1);
    for (const Rational& x : rationals(50)) {
        const CFExpansion a = cf_even(x);
        const auto c = convergents(a);
        const int k = c.k();
        CHECK(Rational(c.p(k - 1), c.q(k - 1)) == x);
        CHECK(c.r(k) == c.p(k - 1) + c.q(k - 1));
        const auto r = oracle::r_sequence(std::vector<oracle::i64>(a.quotients().begin(), a.quotients().end()));
        for (int i = 0; i <= k; ++i) CHECK(c.r(i) == r[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("Stern-Brocot and Calkin-Wilf trees") {
    CHECK(stern_brocot_children(Rational(1)) == std::pair{Rational(1, 2), Rational(2)});
    CHECK(calkin_wilf_children(Rational(1)) == std::pair{Rational(1, 2), Rational(2)});
    const auto kids = stern_brocot_children(Rational(2, 3));
    CHECK(kids.first == rational_of_word(BinaryWord("010")));
    CHECK(kids.second == rational_of_word(BinaryWord("011")));
    for (int d = 0; d <= 6; ++d) {
        const auto sb = tree_level(TreeKind::SternBrocot, d);
        const auto sbo = oracle::stern_brocot_level(d);
        REQUIRE(sb.size() == sbo.size());
        for (std::size_t i = 0; i < sb.size(); ++i) CHECK(sb[i] == Rational(sbo[i].first, sbo[i].second));
        const auto cw = tree_level(TreeKind::CalkinWilf, d);
        const auto cwo = oracle::calkin_wilf_level(d);
        REQUIRE(cw.size() == cwo.size());
        for (std::size_t i = 0; i < cw.size(); ++i) CHECK(cw[i] == Rational(cwo[i].first, cwo[i].second));
    }
}
