#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qcomb/numeration.hpp"

using namespace qcomb;

namespace {

Digits D(std::initializer_list<long> v) { return Digits(v.begin(), v.end()); }

std::vector<oracle::i64> plain(const CFExpansion& a) {
    std::vector<oracle::i64> out;
    for (const auto& x : a.quotients()) out.push_back(static_cast<oracle::i64>(x));
    return out;
}

} // namespace

TEST_CASE("admissibility rules") {
    CHECK(is_admissible(D({2, 2, 1}), CFExpansion{2, 2, 2}));
    CHECK_FALSE(is_admissible(D({0, 1, 0, 0}), CFExpansion{0, 1, 3, 1}));
    CHECK(is_admissible(D({0, 0, 0, 0}), CFExpansion{0, 1, 3, 1}));
    CHECK_THROWS_AS(is_admissible(D({0, 0}), CFExpansion{2, 2, 2}), DomainError);
}

TEST_CASE("admissible set sizes") {
    CHECK(enumerate_admissible(CFExpansion{2, 2, 2}).size() == 17);
    CHECK(enumerate_admissible(CFExpansion{0, 1, 3, 1}).size() == 9);
    // x = 1 has two ideals in its one-point fence, so B([0;1]) has two elements.
    CHECK(enumerate_admissible(CFExpansion{0, 1}) == std::vector<Digits>{D({0, 0}), D({0, 1})});
    const auto p = partition(CFExpansion{0, 1, 3, 1});
    CHECK(p.filled.size() == 4);
    CHECK(p.empty.size() == 5);
    const auto p2 = partition(CFExpansion{1, 1});
    CHECK(p2.filled.size() == 2);
    CHECK(p2.empty.size() == 1);
    const auto p3 = partition(CFExpansion{0, 2});
    CHECK(p3.filled.size() == 1);
    CHECK(p3.empty.size() == 2);
}

TEST_CASE("val and rep on named rows") {
    CHECK(val(D({2, 2, 1}), CFExpansion{2, 2, 2}) == 3);
    CHECK(val(D({2, 2, 2, 2}), CFExpansion{2, 2, 2, 2}) == -24);
    CHECK(val(D({1, 0, 1, 0, 1, 0}), CFExpansion{1, 1, 1, 1, 1, 1}) == 12);
    CHECK(rep(10, CFExpansion{2, 2, 2}) == D({2, 2, 2}));
    CHECK(rep(-8, CFExpansion{1, 1, 1, 1, 1, 1}) == D({1, 1, 1, 1, 1, 1}));
    CHECK(rep(0, CFExpansion{2, 2, 2, 2}) == D({0, 0, 0, 0}));
    CHECK_THROWS_AS(rep(17, CFExpansion{2, 2, 2}), DomainError);
    CHECK_THROWS_AS(val(D({0, 1, 0, 0}), CFExpansion{0, 1, 3, 1}), DomainError);
}

TEST_CASE("intervals") {
    const auto z1 = z_interval(CFExpansion{2, 2, 2});
    CHECK(z1.lo == 0);
    CHECK(z1.hi == 17);
    const auto z2 = z_interval(CFExpansion{2, 2, 2, 2});
    CHECK(z2.lo == -24);
    CHECK(z2.hi == 17);
    const auto z3 = z_interval(CFExpansion{1, 1, 1, 1, 1, 1});
    CHECK(z3.lo == -8);
    CHECK(z3.hi == 13);
}

TEST_CASE("1-norm statistics") {
    const LaurentPoly q = LaurentPoly::q();
    const QVec v = norm1_statistics(CFExpansion{0, 1, 3, 1});
    CHECK(v.x == q.shift(1) + q.shift(2) + q.shift(3) + q.shift(4));
    CHECK(v.y == q.shift(3) + q.shift(2) + q.shift(1) + q + 1);
    CHECK(norm1_statistics(CFExpansion{0, 1}) == QVec{q, 1});
    CHECK(norm1_statistics(CFExpansion{1, 1}) == QVec{q + q * q, 1});
}

TEST_CASE("enumeration, val and rep agree with brute force over all small expansions") {
    std::vector<std::vector<long>> todo{{}};
    std::size_t checked = 0;
    while (!todo.empty()) {
        auto a = todo.back();
        todo.pop_back();
        long sum = 0;
        for (long v : a) sum += v;
        if (!a.empty() && a.back() >= 1) {
            const CFExpansion cf(std::vector<BigInt>(a.begin(), a.end()));
            const auto oracle_set = oracle::admissible(plain(cf));
            const auto got = enumerate_admissible(cf);
            REQUIRE(got.size() == oracle_set.size());
            std::set<std::vector<oracle::i64>> want(oracle_set.begin(), oracle_set.end());
            std::set<oracle::i64> values;
            for (const Digits& b : got) {
                std::vector<oracle::i64> pb;
                for (const auto& d : b) pb.push_back(static_cast<oracle::i64>(d));
                CHECK(want.count(pb) == 1);
                const oracle::i64 n = oracle::alternating_value(pb, plain(cf));
                CHECK(val(b, cf) == n);
                CHECK(rep(n, cf) == b);
                values.insert(n);
            }
            const auto z = z_interval(cf);
            CHECK(BigInt(*values.begin()) == z.lo);
            CHECK(BigInt(*values.rbegin()) + 1 == z.hi);
            CHECK(BigInt(values.size()) == z.hi - z.lo);
            ++checked;
        }
        if (a.size() < 6)
            for (long v = a.empty() ? 0 : 1; sum + v <= 9; ++v) {
                auto b = a;
                b.push_back(v);
                todo.push_back(b);
            }
    }
    CHECK(checked > 500);
}

TEST_CASE("digit helpers") {
    CHECK(digits_str(D({2, 2, 1})) == "2,2,1");
    CHECK(digits_compact(D({2, 2, 1})) == "221");
    CHECK(parse_digits("2, 2,1") == D({2, 2, 1}));
    CHECK_THROWS(parse_digits("2,,1"));
    CHECK(digits_leq(D({0, 1}), D({1, 1})));
    CHECK_FALSE(digits_leq(D({2, 0}), D({1, 1})));
}
