#include "qcomb/render.hpp"

#include <algorithm>
#include <sstream>

namespace qcomb {

namespace {

constexpr int unit = 40;
constexpr int margin = 20;

std::string pt(int v) { return std::to_string(v); }

} // namespace

std::string snake_svg(const SnakeGraph& g, const std::optional<Matching>& m) {
    int maxx = 0, maxy = 0;
    for (const Point& p : g.vertices()) {
        maxx = std::max(maxx, p.x);
        maxy = std::max(maxy, p.y);
    }
    const int width = maxx * unit + 2 * margin, height = maxy * unit + 2 * margin;
    auto X = [&](int x) { return margin + x * unit; };
    auto Y = [&](int y) { return height - margin - y * unit; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<title>G(" << g.word().str() << ")</title>\n";
    std::vector<std::size_t> shaded;
    if (m) shaded = enclosed_cells(g, *m);
    for (std::size_t c = 0; c < g.cell_count(); ++c) {
        const Point a = g.cells()[c];
        const bool fill = std::find(shaded.begin(), shaded.end(), c) != shaded.end();
        out << "<rect x=\"" << X(a.x) << "\" y=\"" << Y(a.y + 1) << "\" width=\"" << unit << "\" height=\"" << unit
            << "\" fill=\"" << (fill ? "#c8c8c8" : "none") << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    }
    for (const Edge& e : basic_matching(g))
        out << "<line x1=\"" << X(e.u.x) << "\" y1=\"" << Y(e.u.y) << "\" x2=\"" << X(e.v.x) << "\" y2=\""
            << Y(e.v.y) << "\" stroke=\"#1f5fbf\" stroke-width=\"2\" stroke-dasharray=\"5,4\"/>\n";
    if (m)
        for (const Edge& e : *m)
            out << "<line x1=\"" << X(e.u.x) << "\" y1=\"" << Y(e.u.y) << "\" x2=\"" << X(e.v.x) << "\" y2=\""
                << Y(e.v.y) << "\" stroke=\"#000000\" stroke-width=\"4\"/>\n";
    for (const Point& p : g.vertices())
        out << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"3\" fill=\"#000000\"/>\n";
    out << "</svg>\n";
    return out.str();
}

std::string snake_dot(const SnakeGraph& g, const std::optional<Matching>& m) {
    std::ostringstream out;
    auto name = [](Point p) { return "\"" + pt(p.x) + "," + pt(p.y) + "\""; };
    out << "graph snake {\n  node [shape=point];\n";
    for (const Point& p : g.vertices()) out << "  " << name(p) << " [pos=\"" << p.x << "," << p.y << "!\"];\n";
    for (const Edge& e : g.edges()) {
        const bool in = m && std::binary_search(m->begin(), m->end(), e);
        out << "  " << name(e.u) << " -- " << name(e.v) << (in ? " [penwidth=3]" : "") << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string fence_svg(const FencePoset& P, const std::optional<OrderIdeal>& I) {
    const auto h = P.heights();
    const int lo = *std::min_element(h.begin(), h.end()), hi = *std::max_element(h.begin(), h.end());
    const int width = static_cast<int>(P.size() - 1) * unit + 2 * margin;
    const int height = (hi - lo) * unit + 2 * margin;
    auto X = [&](std::size_t i) { return margin + static_cast<int>(i) * unit; };
    auto Y = [&](std::size_t i) { return height - margin - (h[i] - lo) * unit; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<title>F(" << P.w.str() << ")</title>\n";
    for (std::size_t i = 1; i < P.size(); ++i)
        out << "<line x1=\"" << X(i - 1) << "\" y1=\"" << Y(i - 1) << "\" x2=\"" << X(i) << "\" y2=\"" << Y(i)
            << "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    for (std::size_t i = 0; i < P.size(); ++i) {
        const bool in = I && (*I >> i & 1);
        out << "<circle cx=\"" << X(i) << "\" cy=\"" << Y(i) << "\" r=\"7\" fill=\"" << (in ? "#000000" : "#ffffff")
            << "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string fence_dot(const FencePoset& P, const std::optional<OrderIdeal>& I) {
    std::ostringstream out;
    out << "digraph fence {\n  rankdir=BT;\n  node [shape=circle, label=\"\"];\n";
    for (std::size_t i = 0; i < P.size(); ++i) {
        const bool in = I && (*I >> i & 1);
        out << "  y" << i << " [xlabel=\"y" << i << "\"" << (in ? ", style=filled, fillcolor=black" : "") << "];\n";
    }
    for (auto [lo, up] : P.covers()) out << "  y" << lo << " -> y" << up << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace qcomb
