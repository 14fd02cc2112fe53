#include "qcomb/words.hpp"

#include <algorithm>
#include <numeric>

#include "qcomb/core.hpp"

namespace qcomb {

BinaryWord::BinaryWord(std::string_view letters) : s_(letters) {
    for (char c : s_)
        if (c != '0' && c != '1')
            throw ParseError("binary word may only contain 0 and 1: '" + s_ + "'");
}

BinaryWord BinaryWord::parse(std::string_view text) {
    if (text == "e" || text == "eps" || text == "\"\"") return BinaryWord();
    return BinaryWord(text);
}

std::size_t BinaryWord::count(int letter) const {
    return static_cast<std::size_t>(std::count(s_.begin(), s_.end(), char('0' + letter)));
}

BinaryWord BinaryWord::operator+(int letter) const { return BinaryWord(Raw{}, s_ + char('0' + letter)); }

BinaryWord operator+(int letter, const BinaryWord& w) {
    return BinaryWord(BinaryWord::Raw{}, char('0' + letter) + w.s_);
}

namespace {

std::string flip_where(const std::string& s, auto pred) {
    std::string out = s;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (pred(i)) out[i] = out[i] == '0' ? '1' : '0';
    return out;
}

std::string substitute(const BinaryWord& w, const char* zero, const char* one) {
    std::string out;
    for (char c : w.str()) out += c == '0' ? zero : one;
    return out;
}

} // namespace

BinaryWord complement(const BinaryWord& w) {
    return BinaryWord(flip_where(w.str(), [](std::size_t) { return true; }));
}

BinaryWord reversal(const BinaryWord& w) {
    return BinaryWord(std::string(w.str().rbegin(), w.str().rend()));
}

BinaryWord hat(const BinaryWord& w) { return complement(reversal(w)); }

BinaryWord theta(const BinaryWord& w) {
    const std::size_t n = w.size();
    return BinaryWord(flip_where(w.str(), [n](std::size_t i) { return (n - 1 - i) % 2 == 0; }));
}

BinaryWord eta(const BinaryWord& w) {
    return BinaryWord(flip_where(w.str(), [](std::size_t i) { return i % 2 == 0; }));
}

BinaryWord gamma(const BinaryWord& w) { return BinaryWord(substitute(w, "00", "0110")); }

BinaryWord gamma_prime(const BinaryWord& w) { return BinaryWord(substitute(w, "10", "1100")); }

BinaryWord christoffel(long p, long q) {
    if (p < 1 || q < 1) throw DomainError("christoffel: p and q must be positive");
    if (std::gcd(p, q) != 1) throw DomainError("christoffel: p and q must be coprime");
    // Digitize the segment (0,0)-(p,q): letter i is 1 when the lattice height
    // floor(i*q/n) increases.
    const long n = p + q;
    std::string s;
    s.reserve(static_cast<std::size_t>(n));
    for (long i = 1; i <= n; ++i)
        s += (i * q) / n > ((i - 1) * q) / n ? '1' : '0';
    return BinaryWord(s);
}

bool is_christoffel(const BinaryWord& w) {
    if (w.size() == 1) return true;
    const long p = static_cast<long>(w.count(0));
    const long q = static_cast<long>(w.count(1));
    if (p == 0 || q == 0 || std::gcd(p, q) != 1) return false;
    return christoffel(p, q) == w;
}

bool is_proper_christoffel(const BinaryWord& w) { return w.size() >= 2 && is_christoffel(w); }

std::vector<BinaryWord> all_words(std::size_t n) {
    std::vector<BinaryWord> out;
    out.reserve(std::size_t{1} << n);
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
        std::string s(n, '0');
        for (std::size_t i = 0; i < n; ++i)
            if (m >> (n - 1 - i) & 1) s[i] = '1';
        out.emplace_back(s);
    }
    return out;
}

} // namespace qcomb
