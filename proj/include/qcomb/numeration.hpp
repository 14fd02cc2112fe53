#pragma once

/**
 * @file numeration.hpp
 * @brief Admissible digit sequences for a continued fraction, the
 * alternating valuation val, its inverse rep, and the B-filled/B-empty split.
 */

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcomb/cf.hpp"
#include "qcomb/qpoly.hpp"

namespace qcomb {

// Digits b_0..b_{k-1}, least significant first.
using Digits = std::vector<BigInt>;

std::string digits_str(const Digits& b);         // "2,2,1"
std::string digits_compact(const Digits& b);     // "221"
Digits parse_digits(std::string_view text);      // "2,2,1"

// Throws DomainError when |b| != k.
bool is_admissible(const Digits& b, const CFExpansion& a);

// All admissible sequences, ordered lexicographically by (b_{k-1}, ..., b_0).
std::vector<Digits> enumerate_admissible(const CFExpansion& a);

struct ZInterval {
    BigInt lo; // inclusive
    BigInt hi; // exclusive
    bool contains(const BigInt& n) const { return lo <= n && n < hi; }
};

ZInterval z_interval(const CFExpansion& a);

// sum (-1)^i b_i r_i; throws DomainError on inadmissible input.
BigInt val(const Digits& b, const CFExpansion& a);

// Inverse of val following the two-step induction on the length of a.
Digits rep(const BigInt& n, const CFExpansion& a);

BigInt norm1(const Digits& b);

// (b_0 = a_0 = 0 and 0 < b_1 = a_1) or 0 < b_0
bool is_filled(const Digits& b, const CFExpansion& a);

struct Partition {
    std::vector<Digits> filled; // B-bullet
    std::vector<Digits> empty;  // B-circle
};

Partition partition(const CFExpansion& a);

// (sum over B-bullet of q^|b|, sum over B-circle of q^|b|) by enumeration.
QVec norm1_statistics(const CFExpansion& a);

// Componentwise order on digit vectors.
bool digits_leq(const Digits& b, const Digits& c);

} // namespace qcomb
