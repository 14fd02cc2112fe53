#pragma once

/**
 * @file markoff.hpp
 * @brief Markoff triples, the maps mu and mu_q on Christoffel words, and the
 * snake-graph area formula for q-Markoff numbers.
 */

#include <vector>

#include "qcomb/cf.hpp"
#include "qcomb/qpoly.hpp"
#include "qcomb/words.hpp"

namespace qcomb {

struct MarkoffTriple {
    BigInt x, y, z;
    bool valid() const { return x * x + y * y + z * z == 3 * x * y * z; }
};

// All Markoff numbers <= bound, sorted and deduplicated.
std::vector<BigInt> markoff_numbers_upto(const BigInt& bound);

// 0 -> [[2,1],[1,1]], 1 -> [[5,2],[2,1]]. Non-Christoffel words are rejected
// unless explore is set.
IMat2 mu(const BinaryWord& w, bool explore = false);
BigInt markoff_of(const BinaryWord& w, bool explore = false);
LaurentPoly q_markoff(const BinaryWord& w, bool explore = false);

// 0 gamma(m) 0
BinaryWord markoff_snake_word(const BinaryWord& m);

// mu_q(0m1)_{12} against the area polynomial of all matchings of G(0 gamma(m) 0).
// Requires 0m1 to be a proper Christoffel word.
bool verify_area_theorem(const BinaryWord& m);

} // namespace qcomb
