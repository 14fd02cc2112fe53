#pragma once

/**
 * @file fence.hpp
 * @brief Fence posets F(w), their order ideals, rank polynomials and the
 * bijection Psi to admissible sequences.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "qcomb/cf.hpp"
#include "qcomb/numeration.hpp"
#include "qcomb/qpoly.hpp"

namespace qcomb {

// Membership bitmask over elements y_0..y_n (bit i is y_i).
using OrderIdeal = std::uint64_t;

inline constexpr std::size_t max_fence_size = 64;

// Elements y_0..y_n for |w| = n; y_{i-1} < y_i is a cover iff w_i = 1
// (1-based letters), otherwise y_i < y_{i-1}.
struct FencePoset {
    BinaryWord w;

    std::size_t size() const { return w.size() + 1; }
    // True when y_{i-1} is covered by y_i, for 1 <= i <= n.
    bool rises(std::size_t i) const { return w[i - 1] == 1; }
    // (lower, upper) index pairs.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;
    // Drawing heights: y_0 at 0, +1 on rises, -1 on descents.
    std::vector<int> heights() const;
};

FencePoset fence_of_word(const BinaryWord& w);
FencePoset fence_of_rational(const Rational& x);

bool is_ideal(const FencePoset& P, OrderIdeal I);

// Left-to-right scan carrying whether the previous element is in the ideal.
// Sorted by (size, mask).
std::vector<OrderIdeal> enumerate_ideals(const FencePoset& P);
// Filters all 2^{n+1} subsets; independent check for small fences.
std::vector<OrderIdeal> enumerate_ideals_bruteforce(const FencePoset& P);
BigInt count_ideals(const FencePoset& P);

std::size_t ideal_size(OrderIdeal I);
std::vector<std::size_t> ideal_elements(OrderIdeal I);
std::string ideal_str(OrderIdeal I); // "{0,1,6}"

// (sum over ideals containing y_0 of q^|I|, sum over the others).
QVec rank_polynomials(const BinaryWord& w);
QVec rank_polynomials(const Rational& x);

// Half-open index intervals C_i(a) = [a_0+...+a_{i-1}, a_0+...+a_i).
std::vector<std::pair<std::size_t, std::size_t>> chain_decomposition(const CFExpansion& a);

Digits psi(OrderIdeal I, const CFExpansion& a);
// Left-most b_i elements of C_i for even i, right-most for odd i.
OrderIdeal psi_inverse(const Digits& b, const CFExpansion& a);

} // namespace qcomb
