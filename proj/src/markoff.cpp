#include "qcomb/markoff.hpp"

#include <algorithm>
#include <set>

#include "qcomb/snake.hpp"

namespace qcomb {

std::vector<BigInt> markoff_numbers_upto(const BigInt& bound) {
    if (bound < 1) throw DomainError("bound must be at least 1");
    std::set<BigInt> seen;
    // Triples with y the largest entry; both children have a larger middle entry.
    std::vector<MarkoffTriple> stack{{1, 1, 1}, {1, 2, 1}, {1, 5, 2}};
    std::set<std::tuple<BigInt, BigInt, BigInt>> visited;
    while (!stack.empty()) {
        MarkoffTriple t = stack.back();
        stack.pop_back();
        if (t.y > bound) continue;
        if (!visited.insert({t.x, t.y, t.z}).second) continue;
        for (const BigInt& v : {t.x, t.y, t.z})
            if (v <= bound) seen.insert(v);
        stack.push_back({t.x, 3 * t.x * t.y - t.z, t.y});
        stack.push_back({t.y, 3 * t.y * t.z - t.x, t.z});
    }
    return {seen.begin(), seen.end()};
}

namespace {

void require_christoffel(const BinaryWord& w, bool explore) {
    if (!explore && !is_christoffel(w)) throw DomainError("'" + w.str() + "' is not a Christoffel word");
}

} // namespace

IMat2 mu(const BinaryWord& w, bool explore) {
    require_christoffel(w, explore);
    const IMat2 zero{2, 1, 1, 1}, one{5, 2, 2, 1};
    IMat2 m = IMat2::identity();
    for (std::size_t i = 0; i < w.size(); ++i) m = m * (w[i] ? one : zero);
    return m;
}

BigInt markoff_of(const BinaryWord& w, bool explore) { return mu(w, explore).a12; }

LaurentPoly q_markoff(const BinaryWord& w, bool explore) {
    require_christoffel(w, explore);
    return mu_q(w).m12;
}

BinaryWord markoff_snake_word(const BinaryWord& m) { return 0 + gamma(m) + 0; }

bool verify_area_theorem(const BinaryWord& m) {
    const BinaryWord word = 0 + m + 1;
    if (!is_proper_christoffel(word)) throw DomainError("0" + m.str() + "1 is not a proper Christoffel word");
    const SnakeGraph g(markoff_snake_word(m));
    const Matching basic = basic_matching(g);
    std::vector<BigInt> hist;
    for (const Matching& x : enumerate_matchings(g)) {
        const std::size_t a = area(g, x, basic);
        if (hist.size() <= a) hist.resize(a + 1, 0);
        hist[a] += 1;
    }
    LaurentPoly areas;
    for (std::size_t a = 0; a < hist.size(); ++a)
        if (hist[a] != 0) areas += LaurentPoly(hist[a], static_cast<int>(a));
    return mu_q(word).m12 == areas;
}

} // namespace qcomb
