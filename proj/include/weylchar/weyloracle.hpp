#pragma once

// Brute-force reference implementations used as test oracles: explicit Weyl group
// enumeration, the literal alternating Weyl sum, and Freudenthal's recursion.
// None of this is on the engine's computation path.

#include <cstddef>
#include <map>
#include <vector>

#include "weylchar/laurent.hpp"
#include "weylchar/rootsys.hpp"

namespace weylchar::weyloracle {

struct WeylElement {
    /// Simple reflections applied right-to-left: s_{word[0]} ... s_{word[n-1]}. Not reduced in general.
    std::vector<int> word;
    /// Action on Dynkin labels: (sigma mu)_i = sum_j action[i][j] mu_j.
    IntMatrix action;
    int det = 1;

    WeightVector apply(const WeightVector& mu) const;
};

inline constexpr std::size_t kDefaultWeylGuard = 10'000'000;

/// All elements of W by breadth-first closure under left multiplication by simple
/// reflections, deduplicated by action matrix. Throws if |W| exceeds the guard.
std::vector<WeylElement> enumerate_weyl(const CartanDatum& datum, std::size_t guard = kDefaultWeylGuard);

/// |W| = r! * prod(highest-root coefficients) * det(A).
Integer weyl_group_order(const CartanDatum& datum);

std::int64_t determinant(const IntMatrix& m);
IntMatrix compose(const IntMatrix& a, const IntMatrix& b);

/// sum_sigma det(sigma) e^{sigma(rho + lambda)} shifted by e^{-w0(rho + lambda)}, i.e. in
/// the same normalization as characters::a_polynomial.
LaurentPolynomial direct_a_polynomial(const CartanDatum& datum, const std::vector<WeylElement>& group,
                                      const WeightVector& highest);
LaurentPolynomial direct_a_polynomial(const CartanDatum& datum, const WeightVector& highest);

/// Dominant weight multiplicities of V(highest) by Freudenthal's formula.
std::map<WeightVector, Integer> freudenthal_multiplicities(const CartanDatum& datum,
                                                           const WeightVector& highest);

/// Dominant weights mu <= highest (highest - mu in the positive root lattice).
std::vector<WeightVector> dominant_weights_below(const CartanDatum& datum, const WeightVector& highest);

}  // namespace weylchar::weyloracle
