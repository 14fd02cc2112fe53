#include "qcomb/snake.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qcomb {

std::string Edge::str() const {
    return "(" + std::to_string(u.x) + "," + std::to_string(u.y) + ")-(" + std::to_string(v.x) + "," +
           std::to_string(v.y) + ")";
}

// -- SnakeGraph -------------------------------------------------------------

SnakeGraph::SnakeGraph(BinaryWord w) : w_(std::move(w)) {
    Point p{0, 0};
    cells_.push_back(p);
    for (std::size_t i = 0; i < w_.size(); ++i) {
        p = p + (w_[i] ? Point{0, 1} : Point{1, 0});
        cells_.push_back(p);
    }
    std::set<Point> vs;
    std::set<Edge> es;
    for (std::size_t c = 0; c < cells_.size(); ++c) {
        for (const Edge& e : square(c)) {
            es.insert(e);
            vs.insert(e.u);
            vs.insert(e.v);
        }
    }
    vertices_.assign(vs.begin(), vs.end());
    edges_.assign(es.begin(), es.end());
}

std::optional<std::size_t> SnakeGraph::cell_at(Point p) const {
    if (p.x < 0 || p.y < 0) return std::nullopt;
    const auto i = static_cast<std::size_t>(p.x + p.y);
    if (i < cells_.size() && cells_[i] == p) return i;
    return std::nullopt;
}

std::array<Edge, 4> SnakeGraph::square(std::size_t cell) const {
    const Point g = cells_.at(cell);
    const Point bl = g, br = g + Point{1, 0}, tl = g + Point{0, 1}, tr = g + Point{1, 1};
    return {Edge::make(bl, br), Edge::make(tl, tr), Edge::make(bl, tl), Edge::make(br, tr)};
}

Edge SnakeGraph::glue(std::size_t i) const {
    const auto sq = square(i);
    return w_[i] ? sq[1] : sq[3];
}

SnakeGraph snake_of_word(const BinaryWord& w) { return SnakeGraph(w); }

SnakeGraph snake_of_rational(const Rational& x) { return SnakeGraph(theta(word_of(x))); }

bool is_perfect_matching(const SnakeGraph& g, const Matching& m) {
    std::map<Point, int> deg;
    for (const Edge& e : m) {
        if (!std::binary_search(g.edges().begin(), g.edges().end(), e)) return false;
        ++deg[e.u];
        ++deg[e.v];
    }
    if (deg.size() != g.vertices().size()) return false;
    return std::all_of(deg.begin(), deg.end(), [](const auto& kv) { return kv.second == 1; });
}

// -- basic matching ---------------------------------------------------------

Matching basic_matching(const SnakeGraph& g) {
    std::set<Edge> interior;
    for (std::size_t i = 0; i + 1 < g.cell_count(); ++i) interior.insert(g.glue(i));
    std::map<Point, std::vector<Edge>> adj;
    for (const Edge& e : g.edges()) {
        if (interior.count(e)) continue;
        adj[e.u].push_back(e);
        adj[e.v].push_back(e);
    }
    const Point start = g.top_right();
    Edge cur = Edge::make(start - Point{0, 1}, start);
    Point at = start - Point{0, 1};
    Matching m;
    bool take = true;
    for (;;) {
        if (take) m.push_back(cur);
        take = !take;
        const auto& pair = adj.at(at);
        const Edge next = pair[0] == cur ? pair[1] : pair[0];
        if (next == Edge::make(start - Point{0, 1}, start)) break;
        at = next.u == at ? next.v : next.u;
        cur = next;
    }
    std::sort(m.begin(), m.end());
    return m;
}

// -- transfer enumeration ---------------------------------------------------

namespace {

struct CellPlan {
    std::array<Point, 4> corners;
    std::vector<Edge> owned;
    std::optional<Edge> entry, exit;
};

std::vector<CellPlan> plan(const SnakeGraph& g) {
    std::vector<CellPlan> out;
    const std::size_t n = g.cell_count();
    for (std::size_t j = 0; j < n; ++j) {
        CellPlan c;
        const Point a = g.cells()[j];
        c.corners = {a, a + Point{1, 0}, a + Point{0, 1}, a + Point{1, 1}};
        if (j > 0) c.entry = g.glue(j - 1);
        if (j + 1 < n) c.exit = g.glue(j);
        for (const Edge& e : g.square(j))
            if (!c.entry || e != *c.entry) c.owned.push_back(e);
        out.push_back(std::move(c));
    }
    return out;
}

// Bit 0: the smaller endpoint of the shared edge is matched; bit 1: the larger one.
using Frontier = unsigned;

struct Step {
    std::vector<Edge> chosen;
    Frontier next;
};

std::vector<Step> steps(const CellPlan& c, Frontier in) {
    std::vector<Step> out;
    std::vector<Point> matched;
    if (c.entry) {
        if (in & 1) matched.push_back(c.entry->u);
        if (in & 2) matched.push_back(c.entry->v);
    }
    const std::size_t k = c.owned.size();
    for (unsigned s = 0; s < (1u << k); ++s) {
        std::vector<Point> cover = matched;
        std::vector<Edge> chosen;
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            if (!(s >> i & 1)) continue;
            const Edge& e = c.owned[i];
            for (const Point& p : {e.u, e.v})
                if (std::find(cover.begin(), cover.end(), p) != cover.end()) ok = false;
            cover.push_back(e.u);
            cover.push_back(e.v);
            chosen.push_back(e);
        }
        if (!ok) continue;
        auto covered = [&](Point p) { return std::find(cover.begin(), cover.end(), p) != cover.end(); };
        for (const Point& p : c.corners)
            if (!covered(p) && !(c.exit && c.exit->touches(p))) ok = false;
        if (!ok) continue;
        Frontier next = 0;
        if (c.exit) next = (covered(c.exit->u) ? 1u : 0u) | (covered(c.exit->v) ? 2u : 0u);
        out.push_back({std::move(chosen), next});
    }
    return out;
}

// steps(cell, frontier) for every cell and each of the four frontier states.
using StepTable = std::vector<std::array<std::vector<Step>, 4>>;

StepTable step_table(const std::vector<CellPlan>& cells) {
    StepTable t(cells.size());
    for (std::size_t j = 0; j < cells.size(); ++j)
        for (Frontier f = 0; f < 4; ++f) t[j][f] = steps(cells[j], f);
    return t;
}

void walk(const StepTable& table, std::size_t j, Frontier in, Matching& cur, std::vector<Matching>& out) {
    if (j == table.size()) {
        Matching m = cur;
        std::sort(m.begin(), m.end());
        out.push_back(std::move(m));
        return;
    }
    for (const Step& s : table[j][in]) {
        cur.insert(cur.end(), s.chosen.begin(), s.chosen.end());
        walk(table, j + 1, s.next, cur, out);
        cur.resize(cur.size() - s.chosen.size());
    }
}

} // namespace

std::vector<Matching> enumerate_matchings(const SnakeGraph& g) {
    const StepTable table = step_table(plan(g));
    std::vector<Matching> out;
    Matching cur;
    walk(table, 0, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt count_matchings(const SnakeGraph& g) {
    const auto cells = plan(g);
    std::map<Frontier, BigInt> layer{{0u, BigInt(1)}};
    for (const CellPlan& c : cells) {
        std::map<Frontier, BigInt> next;
        for (const auto& [f, n] : layer)
            for (const Step& s : steps(c, f)) next[s.next] += n;
        layer = std::move(next);
    }
    BigInt total = 0;
    for (const auto& [f, n] : layer) total += n;
    return total;
}

// -- backtracking oracle ----------------------------------------------------

namespace {

void backtrack(const std::vector<Point>& vs, const std::map<Point, std::vector<Edge>>& adj,
               std::map<Point, bool>& used, Matching& cur, std::vector<Matching>& out) {
    auto it = std::find_if(vs.begin(), vs.end(), [&](const Point& p) { return !used[p]; });
    if (it == vs.end()) {
        Matching m = cur;
        std::sort(m.begin(), m.end());
        out.push_back(std::move(m));
        return;
    }
    const Point p = *it;
    for (const Edge& e : adj.at(p)) {
        const Point q = e.u == p ? e.v : e.u;
        if (used[q]) continue;
        used[p] = used[q] = true;
        cur.push_back(e);
        backtrack(vs, adj, used, cur, out);
        cur.pop_back();
        used[p] = used[q] = false;
    }
}

} // namespace

std::vector<Matching> enumerate_matchings_backtrack(const SnakeGraph& g) {
    std::map<Point, std::vector<Edge>> adj;
    for (const Edge& e : g.edges()) {
        adj[e.u].push_back(e);
        adj[e.v].push_back(e);
    }
    std::map<Point, bool> used;
    Matching cur;
    std::vector<Matching> out;
    backtrack(g.vertices(), adj, used, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

// -- dichotomy and area -----------------------------------------------------

std::string side_name(Side s) { return s == Side::Perp ? "perp" : "par"; }

Edge first_edge(const SnakeGraph&, const Matching& m) {
    for (const Edge& e : m)
        if (e.touches(Point{0, 0})) return e;
    throw DomainError("matching does not cover the origin");
}

Side classify(const SnakeGraph& g, const Matching& m) {
    const Matching b = basic_matching(g);
    return std::binary_search(b.begin(), b.end(), first_edge(g, m)) ? Side::Par : Side::Perp;
}

Side classify_by_orientation(const SnakeGraph& g, const Matching& m) {
    const bool even = g.word().size() % 2 == 0;
    const bool vertical = first_edge(g, m).vertical();
    return (even && !vertical) || (!even && vertical) ? Side::Perp : Side::Par;
}

Matching symmetric_difference(const Matching& a, const Matching& b) {
    Matching out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<std::size_t> enclosed_cells(const SnakeGraph& g, const Matching& m) {
    return enclosed_cells(g, m, basic_matching(g));
}

std::vector<std::size_t> enclosed_cells(const SnakeGraph& g, const Matching& m, const Matching& basic) {
    const Matching d = symmetric_difference(m, basic);
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < g.cell_count(); ++c) {
        // Horizontal ray from the centre (x+1/2, y+1/2) to the right; it meets
        // the vertical edges spanning [y, y+1] to the right of the centre.
        const Point a = g.cells()[c];
        int crossings = 0;
        for (const Edge& e : d)
            if (e.vertical() && e.u.y == a.y && e.u.x > a.x) ++crossings;
        if (crossings % 2 == 1) out.push_back(c);
    }
    return out;
}

std::size_t area(const SnakeGraph& g, const Matching& m) { return enclosed_cells(g, m).size(); }

std::size_t area(const SnakeGraph& g, const Matching& m, const Matching& basic) {
    return enclosed_cells(g, m, basic).size();
}

QVec area_statistics(const BinaryWord& w) {
    const SnakeGraph g(w);
    const Matching basic = basic_matching(g);
    QVec v;
    for (const Matching& m : enumerate_matchings(g)) {
        const LaurentPoly t = LaurentPoly::q(static_cast<int>(area(g, m, basic)));
        (std::binary_search(basic.begin(), basic.end(), first_edge(g, m)) ? v.y : v.x) += t;
    }
    return v;
}

QVec area_statistics(const Rational& x) { return area_statistics(theta(word_of(x))); }

SideCounts side_counts(const SnakeGraph& g) {
    const Matching basic = basic_matching(g);
    SideCounts s{0, 0};
    for (const Matching& m : enumerate_matchings(g))
        (std::binary_search(basic.begin(), basic.end(), first_edge(g, m)) ? s.par : s.perp) += 1;
    return s;
}

// -- Phi --------------------------------------------------------------------

OrderIdeal phi(const SnakeGraph& g, const Matching& m) {
    if (g.cell_count() > max_fence_size) throw DomainError("snake too long for an ideal bitmask");
    OrderIdeal I = 0;
    for (std::size_t c : enclosed_cells(g, m)) I |= OrderIdeal{1} << c;
    return I;
}

Matching pop(const SnakeGraph& g, const Matching& m) {
    if (g.word().empty()) throw DomainError("pop needs a nonempty word");
    const Point o{0, 0};
    const Edge u_bar = Edge::make(o, {0, 1});
    const Edge u_dash = Edge::make(o, {1, 0});
    const auto sq = g.square(0);
    Matching S(sq.begin(), sq.end());
    std::sort(S.begin(), S.end());
    const bool has_bar = std::binary_search(m.begin(), m.end(), u_bar);
    const int alpha = g.word()[0];
    Matching base;
    Edge drop;
    Point shift;
    if (alpha == 0) {
        base = has_bar ? m : symmetric_difference(m, S);
        drop = u_bar;
        shift = {-1, 0};
    } else {
        base = !has_bar ? m : symmetric_difference(m, S);
        drop = u_dash;
        shift = {0, -1};
    }
    Matching out;
    for (const Edge& e : base)
        if (e != drop) out.push_back(e.shifted(shift));
    std::sort(out.begin(), out.end());
    return out;
}

OrderIdeal phi_pop(const SnakeGraph& g, const Matching& m) {
    const OrderIdeal here = classify(g, m) == Side::Perp ? 1 : 0;
    if (g.word().empty()) return here;
    const SnakeGraph rest(g.word().suffix_from(1));
    return (phi_pop(rest, pop(g, m)) << 1) | here;
}

bool region_leq(const SnakeGraph& g, const Matching& m, const Matching& m2) {
    const auto a = enclosed_cells(g, m), b = enclosed_cells(g, m2);
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

PrefixSuffixTable prefix_suffix_table(const Rational& x) {
    PrefixSuffixTable t;
    t.w = theta(word_of(x));
    const std::size_t n = t.w.size();
    for (std::size_t i = 0; i <= n; ++i) {
        const BinaryWord v = t.w.prefix(i);
        const SideCounts c = side_counts(SnakeGraph(v));
        t.prefixes.push_back({v, c.perp, c.par});
    }
    for (std::size_t i = 0; i <= n; ++i) {
        const BinaryWord v = t.w.suffix_from(i);
        const SideCounts c = side_counts(SnakeGraph(v));
        t.suffixes.push_back({v, c.perp, c.par});
    }
    return t;
}

} // namespace qcomb
