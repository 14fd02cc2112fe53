#pragma once

/**
 * @file snake.hpp
 * @brief Snake graphs G(w) in Z^2, perfect matchings, the basic matching,
 * the area statistic and the map Phi to fence-poset ideals.
 */

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "qcomb/cf.hpp"
#include "qcomb/fence.hpp"
#include "qcomb/qpoly.hpp"

namespace qcomb {

struct Point {
    int x = 0, y = 0;
    Point operator+(Point o) const { return {x + o.x, y + o.y}; }
    Point operator-(Point o) const { return {x - o.x, y - o.y}; }
    auto operator<=>(const Point&) const = default;
};

// Unordered lattice edge stored with u < v lexicographically.
struct Edge {
    Point u, v;
    static Edge make(Point a, Point b) { return a < b ? Edge{a, b} : Edge{b, a}; }
    bool vertical() const { return u.x == v.x; }
    bool touches(Point p) const { return u == p || v == p; }
    Edge shifted(Point d) const { return {u + d, v + d}; }
    std::string str() const;
    auto operator<=>(const Edge&) const = default;
};

// Sorted edge list.
using Matching = std::vector<Edge>;

class SnakeGraph {
public:
    explicit SnakeGraph(BinaryWord w);

    const BinaryWord& word() const { return w_; }
    // Cell anchors; cell i sits at the point of the prefix of length i.
    const std::vector<Point>& cells() const { return cells_; }
    std::size_t cell_count() const { return cells_.size(); }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::optional<std::size_t> cell_at(Point p) const;

    // bottom, top, left, right
    std::array<Edge, 4> square(std::size_t cell) const;
    // Edge shared by cells i and i+1.
    Edge glue(std::size_t i) const;
    Point top_right() const { return cells_.back() + Point{1, 1}; }

private:
    BinaryWord w_;
    std::vector<Point> cells_;
    std::vector<Point> vertices_;
    std::vector<Edge> edges_;
};

SnakeGraph snake_of_word(const BinaryWord& w);
// G(theta(W(x)))
SnakeGraph snake_of_rational(const Rational& x);

bool is_perfect_matching(const SnakeGraph& g, const Matching& m);

// Alternate edges of the boundary cycle, starting with the vertical edge at the top-right vertex.
Matching basic_matching(const SnakeGraph& g);

// Cell-by-cell transfer over the two vertices of the outgoing shared edge.
std::vector<Matching> enumerate_matchings(const SnakeGraph& g);
BigInt count_matchings(const SnakeGraph& g);
// Plain vertex backtracking; independent check.
std::vector<Matching> enumerate_matchings_backtrack(const SnakeGraph& g);

enum class Side { Perp, Par };
std::string side_name(Side s);

Edge first_edge(const SnakeGraph& g, const Matching& m);
// Perp iff the first edge is not in the basic matching.
Side classify(const SnakeGraph& g, const Matching& m);
// The same dichotomy stated through |w| parity and the first edge orientation.
Side classify_by_orientation(const SnakeGraph& g, const Matching& m);

Matching symmetric_difference(const Matching& a, const Matching& b);
// Cell indices enclosed by the cycles of m (xor) b, by ray parity from each cell centre.
std::vector<std::size_t> enclosed_cells(const SnakeGraph& g, const Matching& m);
std::size_t area(const SnakeGraph& g, const Matching& m);
// Same, with the basic matching of g precomputed by the caller.
std::vector<std::size_t> enclosed_cells(const SnakeGraph& g, const Matching& m, const Matching& basic);
std::size_t area(const SnakeGraph& g, const Matching& m, const Matching& basic);

// (sum over Perp of q^area, sum over Par of q^area)
QVec area_statistics(const BinaryWord& w);
QVec area_statistics(const Rational& x);

struct SideCounts {
    BigInt perp, par;
    BigInt total() const { return perp + par; }
};
SideCounts side_counts(const SnakeGraph& g);

// {|p| : cell at p enclosed}, an ideal of F(theta(w)).
OrderIdeal phi(const SnakeGraph& g, const Matching& m);
// Removes the first cell; the result is a matching of G(w') where w = a w'.
Matching pop(const SnakeGraph& g, const Matching& m);
OrderIdeal phi_pop(const SnakeGraph& g, const Matching& m);

// Enclosed region of m contained in that of m2.
bool region_leq(const SnakeGraph& g, const Matching& m, const Matching& m2);

struct PrefixSuffixRow {
    BinaryWord v;
    BigInt perp, par;
};

struct PrefixSuffixTable {
    BinaryWord w;
    std::vector<PrefixSuffixRow> prefixes; // lengths 0..n
    std::vector<PrefixSuffixRow> suffixes; // lengths n..0
};

PrefixSuffixTable prefix_suffix_table(const Rational& x);

} // namespace qcomb
