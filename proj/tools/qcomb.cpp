// Command-line front end for the qcomb library.
//
// Exit codes: 0 success, 2 invalid input, 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qcomb/cf.hpp"
#include "qcomb/fence.hpp"
#include "qcomb/markoff.hpp"
#include "qcomb/numeration.hpp"
#include "qcomb/polytope.hpp"
#include "qcomb/qpoly.hpp"
#include "qcomb/render.hpp"
#include "qcomb/snake.hpp"
#include "qcomb/verify.hpp"
#include "qcomb/words.hpp"

using json = nlohmann::ordered_json;
using namespace qcomb;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_verify = 3;

json big_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

json poly_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.coeffs()) terms.push_back({e, big_json(c)});
    return {{"text", p.str()}, {"terms", terms}};
}

json digits_json(const Digits& b) {
    json out = json::array();
    for (const auto& d : b) out.push_back(big_json(d));
    return out;
}

json edge_json(const Edge& e) { return {{e.u.x, e.u.y}, {e.v.x, e.v.y}}; }

json matching_json(const Matching& m) {
    json out = json::array();
    for (const Edge& e : m) out.push_back(edge_json(e));
    return out;
}

bool looks_like_cf(const std::string& text) {
    return !text.empty() && (text.front() == '[' || text.find(',') != std::string::npos);
}

// Accepts "r/s", "n" or a continued fraction; rationals use their even expansion.
CFExpansion parse_target(const std::string& text) {
    if (looks_like_cf(text)) return CFExpansion::parse(text);
    return cf_even(Rational::parse(text));
}

Rational parse_rational_or_cf(const std::string& text) {
    if (looks_like_cf(text)) return CFExpansion::parse(text).value();
    return Rational::parse(text);
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    throw ParseError("format '" + format + "' is not available for this command");
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

struct Globals {
    std::string format = "text";
};

// Each command runs after parsing and returns its exit code.
int cmd_qrat(const Globals& gl, const std::string& x_text, bool shift_check, bool qinv) {
    require_format(gl.format, {"text", "json"});
    const Rational x = parse_rational_or_cf(x_text);
    const QRational q = q_rational(x);
    const bool shift_ok = !shift_check || q_shift_identity_check(x);
    if (gl.format == "json") {
        json j{{"x", x.fraction_str()}, {"numerator", poly_json(q.R)}, {"denominator", poly_json(q.S)}};
        if (shift_check) j["shift_identity"] = shift_ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (qinv ? q.str_qinv() : q.str()) << "\n";
        if (shift_check) std::cout << "shift identity: " << (shift_ok ? "ok" : "FAILED") << "\n";
    }
    return shift_ok ? exit_ok : exit_verify;
}

int cmd_rep(const Globals& gl, const std::string& n_text, const std::string& cf_text) {
    require_format(gl.format, {"text", "json"});
    const CFExpansion a = CFExpansion::parse(cf_text);
    const BigInt n = parse_bigint(n_text);
    const Digits b = rep(n, a);
    if (gl.format == "json")
        std::cout << json{{"n", big_json(n)}, {"cf", a.str()}, {"digits", digits_json(b)}}.dump(2) << "\n";
    else
        std::cout << digits_str(b) << "\n";
    return exit_ok;
}

int cmd_val(const Globals& gl, const std::string& digits_text, const std::string& cf_text) {
    require_format(gl.format, {"text", "json"});
    const CFExpansion a = CFExpansion::parse(cf_text);
    const Digits b = parse_digits(digits_text);
    const BigInt n = val(b, a);
    if (gl.format == "json")
        std::cout << json{{"digits", digits_json(b)}, {"cf", a.str()}, {"n", big_json(n)}}.dump(2) << "\n";
    else
        std::cout << n.str() << "\n";
    return exit_ok;
}

int enum_admissible(const Globals& gl, const std::string& target, bool count) {
    const CFExpansion a = parse_target(target);
    if (count) {
        const Partition p = partition(a);
        if (gl.format == "json")
            std::cout << json{{"cf", a.str()}, {"filled", p.filled.size()}, {"empty", p.empty.size()},
                              {"total", p.filled.size() + p.empty.size()}}
                             .dump(2)
                      << "\n";
        else
            std::cout << "filled=" << p.filled.size() << " empty=" << p.empty.size()
                      << " total=" << p.filled.size() + p.empty.size() << "\n";
        return exit_ok;
    }
    std::vector<std::pair<BigInt, Digits>> rows;
    for (auto& b : enumerate_admissible(a)) rows.emplace_back(val(b, a), std::move(b));
    std::sort(rows.begin(), rows.end());
    if (gl.format == "json") {
        json arr = json::array();
        for (const auto& [n, b] : rows)
            arr.push_back({{"n", big_json(n)}, {"digits", digits_json(b)}, {"norm", big_json(norm1(b))},
                           {"filled", is_filled(b, a)}});
        std::cout << json{{"cf", a.str()}, {"sequences", arr}}.dump(2) << "\n";
    } else {
        for (const auto& [n, b] : rows)
            std::cout << n.str() << "\t" << digits_compact(b) << "\t" << norm1(b).str() << "\t"
                      << (is_filled(b, a) ? "filled" : "empty") << "\n";
    }
    return exit_ok;
}

int enum_ideals(const Globals& gl, const std::string& target, bool count) {
    const FencePoset P = fence_of_word(word_of(parse_target(target)));
    if (P.size() > max_fence_size) throw DomainError("fence has more than 64 elements");
    if (count) {
        // Ideals containing y_0 versus the rest.
        const QVec r = rank_polynomials(P.w);
        const BigInt with = r.x.eval_at_one(), without = r.y.eval_at_one();
        if (gl.format == "json")
            std::cout << json{{"word", P.w.str()}, {"with_y0", big_json(with)}, {"without_y0", big_json(without)},
                              {"total", big_json(BigInt(with + without))}}
                             .dump(2)
                      << "\n";
        else
            std::cout << "with_y0=" << with.str() << " without_y0=" << without.str()
                      << " total=" << BigInt(with + without).str() << "\n";
        return exit_ok;
    }
    const auto ideals = enumerate_ideals(P);
    if (gl.format == "json") {
        json arr = json::array();
        for (OrderIdeal I : ideals) arr.push_back(ideal_elements(I));
        std::cout << json{{"word", P.w.str()}, {"ideals", arr}}.dump(2) << "\n";
    } else {
        for (OrderIdeal I : ideals) std::cout << ideal_size(I) << "\t" << ideal_str(I) << "\n";
    }
    return exit_ok;
}

int enum_matchings(const Globals& gl, const std::string& target, bool count) {
    const SnakeGraph g = snake_of_rational(parse_target(target).value());
    if (count) {
        const SideCounts c = side_counts(g);
        if (gl.format == "json")
            std::cout << json{{"word", g.word().str()}, {"perp", big_json(c.perp)}, {"par", big_json(c.par)},
                              {"total", big_json(c.total())}}
                             .dump(2)
                      << "\n";
        else
            std::cout << "perp=" << c.perp.str() << " par=" << c.par.str() << " total=" << c.total().str() << "\n";
        return exit_ok;
    }
    const auto ms = enumerate_matchings(g);
    if (gl.format == "json") {
        json arr = json::array();
        for (const Matching& m : ms)
            arr.push_back({{"side", side_name(classify(g, m))}, {"area", area(g, m)}, {"edges", matching_json(m)}});
        std::cout << json{{"word", g.word().str()}, {"matchings", arr}}.dump(2) << "\n";
    } else {
        for (const Matching& m : ms) {
            std::vector<std::string> edges;
            for (const Edge& e : m) edges.push_back(e.str());
            std::cout << side_name(classify(g, m)) << "\t" << area(g, m) << "\t" << join(edges, " ") << "\n";
        }
    }
    return exit_ok;
}

int cmd_render(const Globals& gl, const std::string& kind, const std::string& target, bool svg) {
    const std::string format = svg ? "svg" : (gl.format == "text" ? "svg" : gl.format);
    require_format(format, {"svg", "dot", "json"});
    const BinaryWord w = word_of(parse_target(target));
    if (kind == "snake") {
        const SnakeGraph g = snake_of_word(theta(w));
        if (format == "svg") std::cout << snake_svg(g);
        if (format == "dot") std::cout << snake_dot(g);
        if (format == "json") {
            json cells = json::array();
            for (const Point& p : g.cells()) cells.push_back({p.x, p.y});
            std::cout << json{{"word", g.word().str()}, {"cells", cells}, {"basic", matching_json(basic_matching(g))}}
                             .dump(2)
                      << "\n";
        }
    } else {
        const FencePoset P = fence_of_word(w);
        if (format == "svg") std::cout << fence_svg(P);
        if (format == "dot") std::cout << fence_dot(P);
        if (format == "json") {
            json covers = json::array();
            for (const auto& [lo, hi] : P.covers()) covers.push_back({lo, hi});
            std::cout << json{{"word", P.w.str()}, {"size", P.size()}, {"covers", covers}}.dump(2) << "\n";
        }
    }
    return exit_ok;
}

int cmd_table(const Globals& gl, const std::string& target) {
    require_format(gl.format, {"text", "json"});
    const PrefixSuffixTable t = prefix_suffix_table(parse_rational_or_cf(target));
    auto row_json = [](const PrefixSuffixRow& r) {
        return json{{"word", r.v.str()}, {"perp", big_json(r.perp)}, {"par", big_json(r.par)}};
    };
    if (gl.format == "json") {
        json pre = json::array(), suf = json::array();
        for (const auto& r : t.prefixes) pre.push_back(row_json(r));
        for (const auto& r : t.suffixes) suf.push_back(row_json(r));
        std::cout << json{{"word", t.w.str()}, {"prefixes", pre}, {"suffixes", suf}}.dump(2) << "\n";
        return exit_ok;
    }
    const std::size_t n = t.w.size();
    std::cout << "word " << t.w.str() << "\n";
    auto print = [&](const char* label, const PrefixSuffixRow& r) {
        const std::string v = r.v.empty() ? "e" : r.v.str();
        std::cout << label << "\t" << v << std::string(n + 1 - std::min(n + 1, v.size()), ' ') << "\t"
                  << r.perp.str() << "/" << r.par.str() << "\n";
    };
    for (const auto& r : t.prefixes) print("prefix", r);
    for (const auto& r : t.suffixes) print("suffix", r);
    return exit_ok;
}

int cmd_markoff(const Globals& gl, const std::optional<std::string>& upto, const std::optional<std::string>& word,
                bool qpoly) {
    require_format(gl.format, {"text", "json"});
    if (upto.has_value() == word.has_value()) throw ParseError("give exactly one of --upto and --word");
    if (upto) {
        const auto ms = markoff_numbers_upto(parse_bigint(*upto));
        std::vector<std::string> parts;
        json arr = json::array();
        for (const auto& m : ms) {
            parts.push_back(m.str());
            arr.push_back(big_json(m));
        }
        if (gl.format == "json")
            std::cout << json{{"upto", *upto}, {"markoff", arr}}.dump(2) << "\n";
        else
            std::cout << join(parts, " ") << "\n";
        return exit_ok;
    }
    const BinaryWord w = BinaryWord::parse(*word);
    const BigInt m = markoff_of(w);
    if (gl.format == "json") {
        const IMat2 M = mu(w);
        json j{{"word", w.str()},
               {"mu", {{big_json(M.a11), big_json(M.a12)}, {big_json(M.a21), big_json(M.a22)}}},
               {"markoff", big_json(m)}};
        if (qpoly) j["q_markoff"] = poly_json(q_markoff(w));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (qpoly ? q_markoff(w).str() : m.str()) << "\n";
    }
    return exit_ok;
}

int cmd_tree(const Globals& gl, const std::string& kind, int depth) {
    require_format(gl.format, {"text", "json"});
    if (depth < 0) throw ParseError("depth must be non-negative");
    if (depth > 24) throw DomainError("depth above 24 is not supported");
    const auto level = tree_level(kind == "sb" ? TreeKind::SternBrocot : TreeKind::CalkinWilf, depth);
    std::vector<std::string> parts;
    for (const Rational& x : level) parts.push_back(x.str());
    if (gl.format == "json")
        std::cout << json{{"tree", kind}, {"depth", depth}, {"level", parts}}.dump(2) << "\n";
    else
        std::cout << join(parts, " ") << "\n";
    return exit_ok;
}

int cmd_hull(const Globals& gl, const std::string& target) {
    require_format(gl.format, {"text", "json"});
    const CFExpansion a = parse_target(target);
    const ConvexityReport rep = lattice_convexity_report(a);
    const HalfSpace h = halfspace_of(a);
    const bool split = verify_halfspace_split(a);
    std::vector<std::string> normal;
    for (const auto& c : h.normal) normal.push_back(c.str());
    const Partition p = partition(a);
    if (gl.format == "json") {
        json viol = json::array();
        for (const auto& v : rep.violations) viol.push_back(digits_json(v));
        std::cout << json{{"cf", a.str()},
                          {"dim", rep.dim},
                          {"generators", rep.generator_count},
                          {"box_points", big_json(rep.box_size)},
                          {"violations", viol},
                          {"lattice_convex", rep.ok()},
                          {"halfspace", {{"normal", normal}, {"offset", h.offset.str()}}},
                          {"halfspace_split", split},
                          {"filled", p.filled.size()},
                          {"empty", p.empty.size()}}
                             .dump(2)
                  << "\n";
    } else {
        std::cout << "cf " << a.str() << "\n"
                  << "dim " << rep.dim << "\n"
                  << "generators " << rep.generator_count << "\n"
                  << "box points " << rep.box_size.str() << "\n"
                  << "lattice convex " << (rep.ok() ? "yes" : "no") << "\n"
                  << "halfspace " << join(normal, ",") << " . x < " << h.offset.str() << "\n"
                  << "halfspace split " << (split ? "yes" : "no") << "\n"
                  << "filled " << p.filled.size() << " empty " << p.empty.size() << "\n";
    }
    return rep.ok() && split ? exit_ok : exit_verify;
}

int cmd_verify(const Globals& gl, const std::string& level, const std::string& fault, int only) {
    require_format(gl.format, {"text", "json"});
    VerifyOptions opts;
    opts.level = level == "deep" ? Level::Deep : Level::Desk;
    if (fault == "lq") opts.gen = mutated_generators();
    bool all = true;
    json arr = json::array();
    for (int id = only > 0 ? only : 1; id <= (only > 0 ? only : criterion_count); ++id) {
        const CheckResult r = run_criterion(id, opts);
        all = all && r.pass;
        if (gl.format == "json")
            arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"millis", r.millis},
                           {"limit_millis", r.limit_millis}, {"detail", r.detail}});
        else
            std::cout << format_result(r) << std::endl;
    }
    if (gl.format == "json")
        std::cout << json{{"level", level}, {"pass", all}, {"criteria", arr}}.dump(2) << "\n";
    else
        std::cout << (all ? "all criteria passed" : "verification FAILED") << "\n";
    return all ? exit_ok : exit_verify;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-deformed rationals, fence posets, snake graphs and Ostrowski numeration"};
    app.require_subcommand(1);
    Globals gl;
    app.add_option("--format", gl.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "svg", "dot"}))
        ->capture_default_str();

    std::function<int()> action;

    std::string x_text, n_text, cf_text, digits_text, kind, target, level = "desk", fault;
    bool flag_a = false, flag_b = false;
    int depth = 0, only = 0;
    std::optional<std::string> upto, word;

    auto* qrat = app.add_subcommand("qrat", "Print the q-rational [x]_q as numerator/denominator");
    qrat->add_option("x", x_text, "Positive rational r/s or [a0;a1,...]")->required();
    qrat->add_flag("--shift-check", flag_a, "Also check [x+1]_q = q[x]_q + 1");
    qrat->add_flag("--qinv", flag_b, "Print as q^-1(...)/(...)");
    qrat->callback([&] { action = [&] { return cmd_qrat(gl, x_text, flag_a, flag_b); }; });

    auto* repc = app.add_subcommand("rep", "Digits of n in the alternating system of a continued fraction");
    repc->add_option("n", n_text, "Integer in Z(a)")->required();
    repc->add_option("--cf", cf_text, "Continued fraction [a0;a1,...]")->required();
    repc->callback([&] { action = [&] { return cmd_rep(gl, n_text, cf_text); }; });

    auto* valc = app.add_subcommand("val", "Value of an admissible digit vector");
    valc->add_option("digits", digits_text, "Comma-separated digits, least significant first")->required();
    valc->add_option("--cf", cf_text, "Continued fraction [a0;a1,...]")->required();
    valc->callback([&] { action = [&] { return cmd_val(gl, digits_text, cf_text); }; });

    auto* en = app.add_subcommand("enum", "Enumerate admissible sequences, order ideals or perfect matchings");
    en->add_option("kind", kind, "admissible | ideals | matchings")
        ->required()
        ->check(CLI::IsMember({"admissible", "ideals", "matchings"}));
    en->add_option("x", target, "Positive rational r/s or [a0;a1,...]")->required();
    en->add_flag("--count", flag_a, "Print counts split by side instead of the list");
    en->callback([&] {
        action = [&] {
            require_format(gl.format, {"text", "json"});
            if (kind == "admissible") return enum_admissible(gl, target, flag_a);
            if (kind == "ideals") return enum_ideals(gl, target, flag_a);
            return enum_matchings(gl, target, flag_a);
        };
    });

    auto* render = app.add_subcommand("render", "Draw the snake graph or fence poset of x");
    render->add_option("kind", kind, "snake | fence")->required()->check(CLI::IsMember({"snake", "fence"}));
    render->add_option("x", target, "Positive rational r/s or [a0;a1,...]")->required();
    render->add_flag("--svg", flag_a, "Emit SVG (the default unless --format dot|json)");
    render->callback([&] { action = [&] { return cmd_render(gl, kind, target, flag_a); }; });

    auto* table = app.add_subcommand("table", "Side counts of every prefix and suffix of the snake word of x");
    table->add_option("x", target, "Positive rational r/s or [a0;a1,...]")->required();
    table->callback([&] { action = [&] { return cmd_table(gl, target); }; });

    auto* mk = app.add_subcommand("markoff", "Markoff numbers and the map mu on Christoffel words");
    auto* upto_opt = mk->add_option("--upto", upto, "List Markoff numbers up to N");
    auto* word_opt = mk->add_option("--word", word, "Markoff number mu(w)_12 of a Christoffel word");
    upto_opt->excludes(word_opt);
    mk->add_flag("--q", flag_a, "With --word, print the q-Markoff polynomial instead");
    mk->callback([&] { action = [&] { return cmd_markoff(gl, upto, word, flag_a); }; });

    auto* tree = app.add_subcommand("tree", "One level of the Stern-Brocot or Calkin-Wilf tree");
    tree->add_option("kind", kind, "sb | cw")->required()->check(CLI::IsMember({"sb", "cw"}));
    tree->add_option("--depth", depth, "Level below the root 1")->required();
    tree->callback([&] { action = [&] { return cmd_tree(gl, kind, depth); }; });

    auto* hull = app.add_subcommand("hull", "Lattice-convexity and half-space report for B(a)");
    hull->add_option("x", target, "Positive rational r/s or [a0;a1,...]")->required();
    hull->callback([&] { action = [&] { return cmd_hull(gl, target); }; });

    auto* ver = app.add_subcommand("verify", "Run the acceptance suite");
    ver->add_option("--level", level, "desk | deep")->check(CLI::IsMember({"desk", "deep"}))->capture_default_str();
    ver->add_option("--criterion", only, "Run a single criterion 1-9")->check(CLI::Range(1, criterion_count));
    ver->add_option("--inject-fault", fault, "")->check(CLI::IsMember({"lq"}))->group("");
    ver->callback([&] { action = [&] { return cmd_verify(gl, level, fault, only); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        return action();
    } catch (const qcomb::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
}
