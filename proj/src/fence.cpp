#include "qcomb/fence.hpp"

#include <algorithm>
#include <bit>

namespace qcomb {

std::vector<std::pair<std::size_t, std::size_t>> FencePoset::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 1; i < size(); ++i)
        out.emplace_back(rises(i) ? std::pair{i - 1, i} : std::pair{i, i - 1});
    return out;
}

std::vector<int> FencePoset::heights() const {
    std::vector<int> h{0};
    for (std::size_t i = 1; i < size(); ++i) h.push_back(h.back() + (rises(i) ? 1 : -1));
    return h;
}

FencePoset fence_of_word(const BinaryWord& w) {
    if (w.size() + 1 > max_fence_size)
        throw DomainError("fence posets are limited to " + std::to_string(max_fence_size) + " elements");
    return FencePoset{w};
}

FencePoset fence_of_rational(const Rational& x) { return fence_of_word(word_of(x)); }

namespace {

bool closed_under(const std::vector<std::pair<std::size_t, std::size_t>>& covers, OrderIdeal I) {
    for (auto [lo, up] : covers)
        if ((I >> up & 1) && !(I >> lo & 1)) return false;
    return true;
}

} // namespace

bool is_ideal(const FencePoset& P, OrderIdeal I) {
    if (P.size() < 64 && (I >> P.size()) != 0) return false;
    return closed_under(P.covers(), I);
}

namespace {

void scan(const FencePoset& P, std::size_t i, OrderIdeal I, std::vector<OrderIdeal>& out) {
    if (i == P.size()) {
        out.push_back(I);
        return;
    }
    for (int in = 0; in <= 1; ++in) {
        if (i > 0) {
            const bool prev = I >> (i - 1) & 1;
            // A rise forbids (prev out, cur in); a descent forbids (prev in, cur out).
            if (P.rises(i) && in && !prev) continue;
            if (!P.rises(i) && !in && prev) continue;
        }
        scan(P, i + 1, in ? I | (OrderIdeal{1} << i) : I, out);
    }
}

void canonical_sort(std::vector<OrderIdeal>& v) {
    std::sort(v.begin(), v.end(), [](OrderIdeal a, OrderIdeal b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
}

} // namespace

std::vector<OrderIdeal> enumerate_ideals(const FencePoset& P) {
    std::vector<OrderIdeal> out;
    scan(P, 0, 0, out);
    canonical_sort(out);
    return out;
}

std::vector<OrderIdeal> enumerate_ideals_bruteforce(const FencePoset& P) {
    if (P.size() > 24) throw DomainError("subset filter is limited to 24 elements");
    const auto covers = P.covers();
    std::vector<OrderIdeal> out;
    for (OrderIdeal I = 0; I < (OrderIdeal{1} << P.size()); ++I)
        if (closed_under(covers, I)) out.push_back(I);
    canonical_sort(out);
    return out;
}

BigInt count_ideals(const FencePoset& P) {
    // Counts by whether the last scanned element is in the ideal.
    BigInt out = 1, in = 1;
    for (std::size_t i = 1; i < P.size(); ++i) {
        BigInt nout, nin;
        if (P.rises(i)) {
            nout = out + in;
            nin = in;
        } else {
            nout = out;
            nin = out + in;
        }
        out = nout;
        in = nin;
    }
    return out + in;
}

std::size_t ideal_size(OrderIdeal I) { return static_cast<std::size_t>(std::popcount(I)); }

std::vector<std::size_t> ideal_elements(OrderIdeal I) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 64; ++i)
        if (I >> i & 1) out.push_back(i);
    return out;
}

std::string ideal_str(OrderIdeal I) {
    std::string s = "{";
    bool first = true;
    for (auto e : ideal_elements(I)) {
        s += (first ? "" : ",") + std::to_string(e);
        first = false;
    }
    return s + "}";
}

QVec rank_polynomials(const BinaryWord& w) {
    QVec v;
    for (OrderIdeal I : enumerate_ideals(fence_of_word(w))) {
        const LaurentPoly t = LaurentPoly::q(static_cast<int>(ideal_size(I)));
        (I & 1 ? v.x : v.y) += t;
    }
    return v;
}

QVec rank_polynomials(const Rational& x) { return rank_polynomials(word_of(x)); }

std::vector<std::pair<std::size_t, std::size_t>> chain_decomposition(const CFExpansion& a) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto len = static_cast<std::size_t>(to_long(a[i]));
        out.emplace_back(start, start + len);
        start += len;
    }
    return out;
}

Digits psi(OrderIdeal I, const CFExpansion& a) {
    Digits b;
    for (auto [lo, hi] : chain_decomposition(a)) {
        long n = 0;
        for (std::size_t e = lo; e < hi; ++e) n += I >> e & 1;
        b.push_back(n);
    }
    return b;
}

OrderIdeal psi_inverse(const Digits& b, const CFExpansion& a) {
    if (!is_admissible(b, a)) throw DomainError("psi_inverse needs an admissible sequence");
    const auto chains = chain_decomposition(a);
    OrderIdeal I = 0;
    for (std::size_t i = 0; i < chains.size(); ++i) {
        const auto [lo, hi] = chains[i];
        const auto n = static_cast<std::size_t>(to_long(b[i]));
        const std::size_t from = i % 2 == 0 ? lo : hi - n;
        for (std::size_t e = from; e < from + n; ++e) I |= OrderIdeal{1} << e;
    }
    return I;
}

} // namespace qcomb
