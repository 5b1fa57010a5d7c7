#pragma once

#include <cstdint>
#include <vector>

#include "weylchar/laurent.hpp"
#include "weylchar/rootsys.hpp"

namespace weylchar {

/// Special roots gamma_i(I): for each fundamental weight lambda_i, the positive-lattice
/// vectors gamma with lambda_i - gamma on the Weyl orbit of lambda_i.
struct GammaTable {
    /// entries[i][I] is gamma_i(I + 1); entries[i][0] is always 0.
    std::vector<std::vector<RootVector>> entries;

    int rank() const { return static_cast<int>(entries.size()); }
    std::size_t size(int i) const { return entries[static_cast<std::size_t>(i)].size(); }
    const RootVector& at(int i, std::size_t index) const {
        return entries[static_cast<std::size_t>(i)][index];
    }
};

/// Row order inside each table.
enum class TableOrder {
    /// 0 first, then ascending height, ties lexicographic ascending. The engine's canonical order.
    Height,
    /// Lexicographic ascending on coordinates (0 is automatically first).
    Lexicographic,
};

/// One index per fundamental weight, zero-based (the printed form is one-based).
using GammaTuple = std::vector<std::uint32_t>;

struct GammaSystem {
    GammaTable tables;
    /// All tuples satisfying the pairwise orbit conditions, sorted ascending.
    std::vector<GammaTuple> tuples;
    /// +1 / -1, aligned with tuples.
    std::vector<int> signatures;

    std::size_t order() const { return tuples.size(); }
};

GammaTable build_gamma_tables(const CartanDatum& datum, TableOrder order = TableOrder::Height);

/// Depth-first search over i = 1..r with pruning against previously fixed indices.
/// Throws ConsistencyError if the count differs from |W|.
std::vector<GammaTuple> build_tuples(const CartanDatum& datum, const GammaTable& tables);

/// prod over positive roots of (e^alpha - 1), expanded smallest height first.
LaurentPolynomial denominator_product(const CartanDatum& datum);

/// Reads each signature off the expanded denominator product.
GammaSystem assign_signatures(const CartanDatum& datum, GammaTable tables, std::vector<GammaTuple> tuples);

/// build_gamma_tables + build_tuples + assign_signatures.
GammaSystem build_gamma_system(const CartanDatum& datum, TableOrder order = TableOrder::Height);

/// Exponent vectors xi(A) for every tuple, in the lowest-weight normalization:
///   xi_i(A) = (2 / (alpha_i, alpha_i)) (lambda_i - gamma_i(A), rho + highest) + c_i
/// where c is the root-coordinate vector of -w0(rho + highest). All entries are
/// non-negative integers; a non-integral value throws ConsistencyError.
std::vector<Exponent> exponents(const CartanDatum& datum, const GammaSystem& system,
                                const WeightVector& highest);

/// Raw exponents without the -w0 shift (rational in general; integral for F4).
std::vector<std::vector<Rational>> raw_exponents(const CartanDatum& datum, const GammaSystem& system,
                                                 const WeightVector& highest);

/// Reorders tables into `order` and renumbers tuples to match; signatures move with tuples.
GammaSystem reorder(const GammaSystem& system, TableOrder order);

/// Checks every stored invariant (table shape, pairwise conditions, count, signature
/// balance). Throws ConsistencyError naming the first violation.
void validate(const CartanDatum& datum, const GammaSystem& system);

}  // namespace weylchar
