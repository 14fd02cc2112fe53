#include "qcomb/polytope.hpp"

#include <limits>
#include <map>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

namespace qcomb {

bool HalfSpace::contains(const IntVec& x) const {
    BigRational t = 0;
    for (std::size_t i = 0; i < normal.size(); ++i) t += normal[i] * BigRational(x[i]);
    return strict ? t < offset : t <= offset;
}

HalfSpace halfspace_of(const CFExpansion& a) {
    HalfSpace h;
    h.normal.assign(a.size(), 0);
    if (a[0] != 0) {
        h.normal[0] = 1;
        h.offset = 1;
    } else {
        if (a.size() < 2) throw DomainError("a_0 = 0 needs at least two quotients");
        h.normal[1] = 1;
        h.offset = BigRational(a[1]);
    }
    return h;
}

HullSystem hull_of(const CFExpansion& a) {
    HullSystem H;
    H.dim = a.size();
    for (auto& b : enumerate_admissible(a)) H.generators.push_back(std::move(b));
    return H;
}

namespace {

struct Overflow {};

// Exact arithmetic on machine integers; overflow aborts to the BigInt path.
struct Checked {
    static long long add(long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static long long mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static long long abs(long long a) {
        if (a == std::numeric_limits<long long>::min()) throw Overflow{};
        return a < 0 ? -a : a;
    }
    static long long gcd(long long a, long long b) { return std::gcd(a, b); }
};

struct Exact {
    static BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
    static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
    static BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }
    static BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
};

template <class Int>
struct Row {
    std::vector<Int> c;
    boost::dynamic_bitset<> anc;
};

// Rows encode strict inequalities c . h < 0. Returns true iff the system has no solution h.
template <class Int, class Ops>
bool fm_infeasible(const std::vector<std::vector<Int>>& input, std::size_t dim) {
    std::vector<Row<Int>> rows;
    for (std::size_t i = 0; i < input.size(); ++i) {
        Row<Int> r{input[i], boost::dynamic_bitset<>(input.size())};
        r.anc.set(i);
        rows.push_back(std::move(r));
    }
    auto is_zero = [&](const std::vector<Int>& c, std::size_t from) {
        for (std::size_t j = from; j < dim; ++j)
            if (c[j] != 0) return false;
        return true;
    };
    for (const auto& r : rows)
        if (is_zero(r.c, 0)) return true;

    for (std::size_t t = 0; t < dim; ++t) {
        std::vector<const Row<Int>*> pos, neg;
        std::map<std::vector<Int>, Row<Int>> next;
        auto keep = [&](Row<Int>&& r) {
            auto it = next.find(r.c);
            if (it == next.end())
                next.emplace(r.c, std::move(r));
            else if (r.anc.count() < it->second.anc.count())
                it->second = std::move(r);
        };
        for (const auto& r : rows) {
            if (r.c[t] > 0)
                pos.push_back(&r);
            else if (r.c[t] < 0)
                neg.push_back(&r);
            else
                keep(Row<Int>(r));
        }
        for (const auto* p : pos) {
            for (const auto* n : neg) {
                boost::dynamic_bitset<> anc = p->anc | n->anc;
                // Chernikov: after eliminating t+1 variables, more than t+2 ancestors is redundant.
                if (anc.count() > t + 2) continue;
                const Int mp = Ops::abs(n->c[t]), mn = p->c[t];
                std::vector<Int> c(dim, Int(0));
                Int g = 0;
                for (std::size_t j = t + 1; j < dim; ++j) {
                    c[j] = Ops::add(Ops::mul(mp, p->c[j]), Ops::mul(mn, n->c[j]));
                    g = Ops::gcd(g, Ops::abs(c[j]));
                }
                if (g == 0) return true; // 0 < 0
                if (g != 1)
                    for (std::size_t j = t + 1; j < dim; ++j) c[j] /= g;
                keep(Row<Int>{std::move(c), std::move(anc)});
            }
        }
        rows.clear();
        for (auto& [k, r] : next) rows.push_back(std::move(r));
    }
    return !rows.empty();
}

} // namespace

bool in_hull(const IntVec& c, const HullSystem& H) {
    if (c.size() != H.dim) throw DomainError("point dimension does not match the hull");
    try {
        std::vector<std::vector<long long>> rows;
        for (const auto& g : H.generators) {
            std::vector<long long> r;
            for (std::size_t j = 0; j < H.dim; ++j) {
                const BigInt d = g[j] - c[j];
                if (d > std::numeric_limits<long long>::max() / 4 || d < std::numeric_limits<long long>::min() / 4)
                    throw Overflow{};
                r.push_back(d.convert_to<long long>());
            }
            rows.push_back(std::move(r));
        }
        return fm_infeasible<long long, Checked>(rows, H.dim);
    } catch (const Overflow&) {
        std::vector<std::vector<BigInt>> rows;
        for (const auto& g : H.generators) {
            std::vector<BigInt> r;
            for (std::size_t j = 0; j < H.dim; ++j) r.push_back(g[j] - c[j]);
            rows.push_back(std::move(r));
        }
        return fm_infeasible<BigInt, Exact>(rows, H.dim);
    }
}

ConvexityReport lattice_convexity_report(const CFExpansion& a) {
    const HullSystem H = hull_of(a);
    ConvexityReport rep;
    rep.dim = H.dim;
    rep.generator_count = H.generators.size();
    rep.box_size = 1;
    for (const auto& x : a.quotients()) rep.box_size *= x + 1;
    IntVec p(a.size(), 0);
    for (;;) {
        if (is_admissible(p, a) != in_hull(p, H)) rep.violations.push_back(p);
        std::size_t i = 0;
        while (i < p.size() && p[i] == a[i]) p[i++] = 0;
        if (i == p.size()) break;
        p[i] += 1;
    }
    return rep;
}

bool verify_lattice_convexity(const CFExpansion& a) { return lattice_convexity_report(a).ok(); }

bool verify_halfspace_split(const CFExpansion& a) {
    const HalfSpace h = halfspace_of(a);
    for (const auto& b : enumerate_admissible(a))
        if (is_filled(b, a) == h.contains(b)) return false;
    return true;
}

std::vector<IntVec> observed_vertices(const HullSystem& H) {
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < H.generators.size(); ++i) {
        HullSystem rest{H.dim, {}};
        for (std::size_t j = 0; j < H.generators.size(); ++j)
            if (j != i) rest.generators.push_back(H.generators[j]);
        if (!in_hull(H.generators[i], rest)) out.push_back(H.generators[i]);
    }
    return out;
}

std::vector<BigInt> slice_counts(const CFExpansion& a) {
    std::vector<BigInt> out(static_cast<std::size_t>(to_long(a.sum())) + 1, 0);
    for (const auto& b : enumerate_admissible(a)) out[static_cast<std::size_t>(to_long(norm1(b)))] += 1;
    return out;
}

} // namespace qcomb
