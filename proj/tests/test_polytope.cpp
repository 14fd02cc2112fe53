#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qcomb/polytope.hpp"

using namespace qcomb;

namespace {

IntVec V(std::initializer_list<long> v) { return IntVec(v.begin(), v.end()); }

} // namespace

TEST_CASE("hull membership") {
    const CFExpansion a{0, 1, 3, 1};
    const HullSystem H = hull_of(a);
    CHECK(H.generators.size() == 9);
    for (const auto& b : H.generators) CHECK(in_hull(b, H));
    CHECK_FALSE(in_hull(V({0, 0, 0, 1}), H));
    CHECK(in_hull(V({1, 1, 1}), hull_of(CFExpansion{2, 2, 2})));
    CHECK(is_admissible(V({1, 1, 1}), CFExpansion{2, 2, 2}));
}

TEST_CASE("lattice convexity on named expansions") {
    CHECK(verify_lattice_convexity(CFExpansion{0, 1, 3, 1}));
    CHECK(verify_lattice_convexity(CFExpansion{2, 2, 2}));
    CHECK(verify_lattice_convexity(CFExpansion{1, 1}));
    const auto r = lattice_convexity_report(CFExpansion{2, 2, 2});
    CHECK(r.box_size == 27);
    CHECK(r.generator_count == 17);
    CHECK(r.ok());
}

TEST_CASE("two-dimensional hulls agree with a planar hull oracle") {
    for (long a0 = 0; a0 <= 5; ++a0)
        for (long a1 = 1; a1 <= 5; ++a1) {
            const CFExpansion a{a0, a1};
            const HullSystem H = hull_of(a);
            std::vector<std::pair<oracle::i64, oracle::i64>> pts;
            for (const auto& g : H.generators) pts.emplace_back(static_cast<long>(g[0]), static_cast<long>(g[1]));
            for (long x = -1; x <= a0 + 1; ++x)
                for (long y = -1; y <= a1 + 1; ++y)
                    CHECK(in_hull(V({x, y}), H) == oracle::in_planar_hull(pts, {x, y}));
        }
}

TEST_CASE("half-space split") {
    for (const CFExpansion& a : {CFExpansion{0, 1, 3, 1}, CFExpansion{2, 2, 2}, CFExpansion{1, 1}, CFExpansion{0, 2},
                                 CFExpansion{3, 3, 2, 1, 3, 3}})
        CHECK(verify_halfspace_split(a));
    const HalfSpace h = halfspace_of(CFExpansion{2, 2, 2});
    CHECK(h.contains(V({0, 2, 2})));
    CHECK_FALSE(h.contains(V({1, 0, 0})));
    const HalfSpace h0 = halfspace_of(CFExpansion{0, 2});
    CHECK(h0.contains(V({0, 1})));
    CHECK_FALSE(h0.contains(V({0, 2})));
}

TEST_CASE("slices by 1-norm are unimodal") {
    std::vector<std::vector<long>> todo{{}};
    while (!todo.empty()) {
        auto a = todo.back();
        todo.pop_back();
        long sum = 0;
        for (long v : a) sum += v;
        if (!a.empty() && a.back() >= 1) {
            const auto s = slice_counts(CFExpansion(std::vector<BigInt>(a.begin(), a.end())));
            std::size_t i = 0;
            while (i + 1 < s.size() && s[i] <= s[i + 1]) ++i;
            while (i + 1 < s.size() && s[i] >= s[i + 1]) ++i;
            CHECK(i + 1 == s.size());
        }
        if (a.size() < 6)
            for (long v = a.empty() ? 0 : 1; sum + v <= 10; ++v) {
                auto b = a;
                b.push_back(v);
                todo.push_back(b);
            }
    }
}

TEST_CASE("observed vertices are generators") {
    const HullSystem H = hull_of(CFExpansion{2, 2, 2});
    const auto vs = observed_vertices(H);
    CHECK_FALSE(vs.empty());
    for (const auto& v : vs) CHECK(std::find(H.generators.begin(), H.generators.end(), v) != H.generators.end());
}
