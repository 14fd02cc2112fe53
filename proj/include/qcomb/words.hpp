#pragma once

/**
 * @file words.hpp
 * @brief Binary words over {0,1}: involutions, the morphisms gamma and
 * gamma', and lower Christoffel words.
 */

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace qcomb {

class BinaryWord {
public:
    BinaryWord() = default;
    // Accepts a string of '0'/'1' characters; the empty string is the empty word.
    explicit BinaryWord(std::string_view letters);

    static BinaryWord parse(std::string_view text);

    std::size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }
    int operator[](std::size_t i) const { return s_[i] - '0'; }
    const std::string& str() const { return s_; }

    std::size_t count(int letter) const;
    BinaryWord prefix(std::size_t n) const { return BinaryWord(Raw{}, s_.substr(0, n)); }
    BinaryWord suffix_from(std::size_t i) const { return BinaryWord(Raw{}, s_.substr(i)); }

    BinaryWord operator+(const BinaryWord& o) const { return BinaryWord(Raw{}, s_ + o.s_); }
    BinaryWord operator+(int letter) const;
    friend BinaryWord operator+(int letter, const BinaryWord& w);

    auto operator<=>(const BinaryWord&) const = default;

private:
    struct Raw {};
    BinaryWord(Raw, std::string s) : s_(std::move(s)) {}
    std::string s_;
};

BinaryWord complement(const BinaryWord& w);
BinaryWord reversal(const BinaryWord& w);
BinaryWord hat(const BinaryWord& w);
// Flips the letters at even distance from the right end (the last letter has distance 0).
BinaryWord theta(const BinaryWord& w);
// eta(wa) = eta(w) + (a flipped iff |w| even).
BinaryWord eta(const BinaryWord& w);
// 0 -> 00, 1 -> 0110
BinaryWord gamma(const BinaryWord& w);
// 0 -> 10, 1 -> 1100
BinaryWord gamma_prime(const BinaryWord& w);

// Lower Christoffel word with p zeros and q ones; requires p,q >= 1 and gcd(p,q) = 1.
BinaryWord christoffel(long p, long q);
bool is_christoffel(const BinaryWord& w);
// Christoffel words other than the single letters.
bool is_proper_christoffel(const BinaryWord& w);

// All words of length n in lexicographic order.
std::vector<BinaryWord> all_words(std::size_t n);

} // namespace qcomb

template <>
struct std::hash<qcomb::BinaryWord> {
    std::size_t operator()(const qcomb::BinaryWord& w) const noexcept {
        return std::hash<std::string>{}(w.str());
    }
};
