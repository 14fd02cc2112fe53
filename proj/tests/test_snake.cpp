#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qcomb/snake.hpp"

using namespace qcomb;

TEST_CASE("snake construction") {
    const SnakeGraph g = snake_of_rational(Rational(27, 10));
    CHECK(g.word().str() == "0111001");
    CHECK(g.cell_count() == 8);
    CHECK(snake_of_rational(Rational(1)).cell_count() == 1);
    CHECK(snake_of_rational(Rational(2, 7)).word().str() == "0100");
    const SnakeGraph one(BinaryWord(""));
    CHECK(one.vertices().size() == 4);
    CHECK(one.edges().size() == 4);
}

TEST_CASE("matching counts") {
    CHECK(enumerate_matchings(snake_of_rational(Rational(2, 7))).size() == 9);
    CHECK(count_matchings(snake_of_rational(Rational(84, 37))) == 121);
    CHECK(count_matchings(snake_of_rational(Rational(179, 254))) == 433);
    CHECK(snake_of_rational(Rational(179, 254)).word().str() == "001100001100");
}

TEST_CASE("matching counts agree with edge-subset brute force") {
    for (std::size_t n = 0; n <= 4; ++n)
        for (const BinaryWord& w : all_words(n)) {
            const SnakeGraph g(w);
            const std::size_t want = oracle::snake_matchings_by_subsets(w.str());
            CHECK(count_matchings(g) == want);
            CHECK(enumerate_matchings(g).size() == want);
            CHECK(enumerate_matchings_backtrack(g).size() == want);
        }
}

TEST_CASE("matchings are perfect and distinct") {
    for (std::size_t n = 0; n <= 8; ++n)
        for (const BinaryWord& w : all_words(n)) {
            const SnakeGraph g(w);
            const auto ms = enumerate_matchings(g);
            for (const Matching& m : ms) CHECK(is_perfect_matching(g, m));
            CHECK(std::set<Matching>(ms.begin(), ms.end()).size() == ms.size());
        }
}

TEST_CASE("basic matching") {
    for (std::size_t n = 0; n <= 8; ++n)
        for (const BinaryWord& w : all_words(n)) {
            const SnakeGraph g(w);
            const Matching b = basic_matching(g);
            CHECK(is_perfect_matching(g, b));
            CHECK(classify(g, b) == Side::Par);
            CHECK(area(g, b) == 0);
            CHECK(phi(g, b) == 0);
            // The top-right vertex is covered by a vertical edge.
            const Point tr = g.top_right();
            const auto it = std::find_if(b.begin(), b.end(), [&](const Edge& e) { return e.touches(tr); });
            REQUIRE(it != b.end());
            CHECK(it->vertical());
            for (const Matching& m : enumerate_matchings(g)) CHECK(classify(g, m) == classify_by_orientation(g, m));
        }
}

TEST_CASE("side counts and area statistics") {
    const SideCounts c = side_counts(snake_of_rational(Rational(2, 7)));
    CHECK(c.perp == 2);
    CHECK(c.par == 7);
    CHECK(c.total() == 9);
    const QVec a = area_statistics(Rational(2, 7));
    CHECK(a.x.str() == "q^5+q^4");
    CHECK(a.y.str() == "q^4+2q^3+2q^2+q+1");
    const LaurentPoly q = LaurentPoly::q();
    CHECK(area_statistics(Rational(1)) == QVec{q, 1});
    const QVec b = area_statistics(Rational(4, 5));
    CHECK(b.x.str() == "q^5+q^4+q^3+q^2");
    CHECK(b.y.str() == "q^4+q^3+q^2+q+1");
}

TEST_CASE("Phi on the 14-letter example") {
    const BinaryWord w("10110110001001");
    const SnakeGraph g(w);
    const FencePoset P = fence_of_word(theta(w));
    OrderIdeal target = 0;
    for (int e : {0, 1, 5, 6, 7, 8, 9, 13, 14}) target |= OrderIdeal{1} << e;
    REQUIRE(is_ideal(P, target));
    std::size_t hits = 0;
    for (const Matching& m : enumerate_matchings(g))
        if (phi(g, m) == target) {
            ++hits;
            CHECK(area(g, m) == 9);
            CHECK(phi_pop(g, m) == target);
        }
    CHECK(hits == 1);
}

TEST_CASE("Phi is a bijection onto the ideals and respects order") {
    for (std::size_t n = 0; n <= 9; ++n)
        for (const BinaryWord& w : all_words(n)) {
            const SnakeGraph g(w);
            const FencePoset P = fence_of_word(theta(w));
            const auto ms = enumerate_matchings(g);
            std::set<OrderIdeal> images;
            for (const Matching& m : ms) {
                const OrderIdeal I = phi(g, m);
                CHECK(is_ideal(P, I));
                CHECK(phi_pop(g, m) == I);
                CHECK(ideal_size(I) == area(g, m));
                CHECK(((I & 1) != 0) == (classify(g, m) == Side::Perp));
                images.insert(I);
            }
            CHECK(images.size() == ms.size());
            CHECK(images.size() == enumerate_ideals(P).size());
            if (n <= 6)
                for (const Matching& m : ms)
                    for (const Matching& m2 : ms)
                        CHECK(region_leq(g, m, m2) == ((phi(g, m) & ~phi(g, m2)) == 0));
        }
}

TEST_CASE("symmetric difference of a matching with itself is empty") {
    const SnakeGraph g(BinaryWord("0100"));
    for (const Matching& m : enumerate_matchings(g)) {
        CHECK(symmetric_difference(m, m).empty());
        CHECK(enclosed_cells(g, basic_matching(g)).empty());
    }
}

TEST_CASE("prefix and suffix table") {
    const PrefixSuffixTable t = prefix_suffix_table(Rational(1));
    REQUIRE(t.prefixes.size() == 1);
    CHECK(t.prefixes[0].perp == 1);
    CHECK(t.prefixes[0].par == 1);
    const PrefixSuffixTable u = prefix_suffix_table(Rational(84, 37));
    CHECK(u.prefixes.size() == 11);
    CHECK(u.suffixes.size() == 11);
    CHECK(u.prefixes.back().perp == 84);
    CHECK(u.prefixes.back().par == 37);
}

TEST_CASE("edge printing") {
    CHECK(Edge::make({1, 0}, {0, 0}).str() == "(0,0)-(1,0)");
}

TEST_CASE("matching counts of G(x-1) and G([a1-1;a2,...]) recover x") {
    for (long n = 2; n <= 40; ++n)
        for (long s = 1; s < n; ++s) {
            const long r = n;
            if (std::gcd(r, s) != 1 || r <= s) continue;
            const Rational x(r, s);
            const CFExpansion a = cf_euclid(x);
            CHECK(count_matchings(snake_of_rational(Rational(r - s, s))) == r);
            BigInt den = 1;
            if (a.size() >= 2) {
                std::vector<BigInt> tail(a.quotients().begin() + 1, a.quotients().end());
                tail[0] -= 1;
                den = count_matchings(snake_of_rational(CFExpansion(tail).value()));
            }
            CHECK(den == s);
        }
}
