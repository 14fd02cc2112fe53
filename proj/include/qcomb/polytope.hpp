#pragma once

/**
 * @file polytope.hpp
 * @brief Exact convex-hull membership for the admissible sequences of a
 * continued fraction and the open half-space separating B-bullet from B-circle.
 */

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qcomb/numeration.hpp"

namespace qcomb {

using BigRational = boost::multiprecision::cpp_rational;
using IntVec = std::vector<BigInt>;

// { x : normal . x < offset } (strict) or <= when strict is false.
struct HalfSpace {
    std::vector<BigRational> normal;
    BigRational offset;
    bool strict = true;
    bool contains(const IntVec& x) const;
};

// The open half-space delta(a_0)(1 - x_0) + (1 - delta(a_0))(a_1 - x_1) > 0.
HalfSpace halfspace_of(const CFExpansion& a);

struct HullSystem {
    std::size_t dim = 0;
    std::vector<IntVec> generators;
};

HullSystem hull_of(const CFExpansion& a);

// Exact test c in conv(generators): Fourier-Motzkin elimination on the
// system h . (g - c) < 0 for all generators g, which is solvable iff a
// hyperplane strictly separates c from the generators.
bool in_hull(const IntVec& c, const HullSystem& H);

struct ConvexityReport {
    std::size_t dim = 0;
    std::size_t generator_count = 0;
    BigInt box_size = 0;
    // Box points where hull membership and admissibility disagree.
    std::vector<IntVec> violations;
    bool ok() const { return violations.empty(); }
};

ConvexityReport lattice_convexity_report(const CFExpansion& a);
bool verify_lattice_convexity(const CFExpansion& a);
bool verify_halfspace_split(const CFExpansion& a);

// Generators that are not in the hull of the remaining generators.
std::vector<IntVec> observed_vertices(const HullSystem& H);

// Number of admissible sequences with each 1-norm, from 0 to sum(a).
std::vector<BigInt> slice_counts(const CFExpansion& a);

} // namespace qcomb
