#pragma once

/**
 * @file cf.hpp
 * @brief Positive rationals, even/odd continued fractions, the word codec W,
 * the involution tau, convergents and the two binary trees of rationals.
 */

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcomb/core.hpp"
#include "qcomb/words.hpp"

namespace qcomb {

// Positive fraction in lowest terms.
class Rational {
public:
    Rational(BigInt r, BigInt s);
    explicit Rational(long n) : Rational(BigInt(n), BigInt(1)) {}

    // "r/s" or "n".
    static Rational parse(std::string_view text);

    const BigInt& num() const { return r_; }
    const BigInt& den() const { return s_; }
    Rational inverse() const { return Rational(s_, r_); }
    Rational plus_one() const { return Rational(r_ + s_, s_); }

    // "r/s", or "r" when s = 1.
    std::string str() const;
    // Always "r/s".
    std::string fraction_str() const;

    bool operator==(const Rational&) const = default;
    bool operator<(const Rational& o) const { return r_ * o.s_ < o.r_ * s_; }

private:
    BigInt r_, s_;
};

// Finite list of partial quotients a_0 >= 0, a_i >= 1 for i > 0.
class CFExpansion {
public:
    explicit CFExpansion(std::vector<BigInt> a);
    CFExpansion(std::initializer_list<long> a);

    // "[a0;a1,...,ak-1]" or "[a0]".
    static CFExpansion parse(std::string_view text);

    std::size_t size() const { return a_.size(); }
    const BigInt& operator[](std::size_t i) const { return a_[i]; }
    const std::vector<BigInt>& quotients() const { return a_; }
    bool is_even() const { return a_.size() % 2 == 0; }
    BigInt sum() const;
    Rational value() const;
    std::string str() const;

    bool operator==(const CFExpansion&) const = default;

private:
    std::vector<BigInt> a_;
};

// Raw Euclidean expansion (last quotient >= 2 unless x is an integer).
CFExpansion cf_euclid(const Rational& x);
CFExpansion cf_even(const Rational& x);
CFExpansion cf_odd(const Rational& x);
// Rewrites [..., a, 1] <-> [..., a+1] until the length has the requested parity.
CFExpansion with_parity(const CFExpansion& a, bool even);

// W; requires an even-length expansion.
BinaryWord word_of(const CFExpansion& a);
BinaryWord word_of(const Rational& x);
// Y = W^{-1} at the level of expansions; the result has even length.
CFExpansion cf_of_word(const BinaryWord& w);
Rational rational_of_word(const BinaryWord& w);

// [a_{2l-1}-1, a_{2l-2}, ..., a_1, a_0+1]; requires even length.
CFExpansion tau(const CFExpansion& a);

struct ConvergentTable {
    // p_i, q_i for -1 <= i <= k-1; r_i for -1 <= i <= k.
    std::vector<BigInt> p_, q_, r_;
    const BigInt& p(int i) const { return p_.at(static_cast<std::size_t>(i + 1)); }
    const BigInt& q(int i) const { return q_.at(static_cast<std::size_t>(i + 1)); }
    const BigInt& r(int i) const { return r_.at(static_cast<std::size_t>(i + 1)); }
    int k() const { return static_cast<int>(p_.size()) - 1; }
};

ConvergentTable convergents(const CFExpansion& a);

struct IMat2 {
    BigInt a11, a12, a21, a22;
    static IMat2 identity() { return {1, 0, 0, 1}; }
    IMat2 operator*(const IMat2& o) const;
    bool operator==(const IMat2&) const = default;
};

inline IMat2 L_int() { return {1, 0, 1, 1}; }
inline IMat2 R_int() { return {1, 1, 0, 1}; }

// R^{a0} L^{a1} ... L^{a_{2l-1}} (1,0)^T; requires even length.
std::pair<BigInt, BigInt> matrix_identity_check(const CFExpansion& a);

// Children in prefix order (append 0, append 1 to W(x)).
std::pair<Rational, Rational> stern_brocot_children(const Rational& x);
// Children in suffix order (prepend 0, prepend 1 to W(x)).
std::pair<Rational, Rational> calkin_wilf_children(const Rational& x);

enum class TreeKind { SternBrocot, CalkinWilf };
// Nodes at the given depth (root 1 at depth 0), left to right.
std::vector<Rational> tree_level(TreeKind kind, int depth);

} // namespace qcomb
