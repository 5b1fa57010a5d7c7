#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "weylchar/laurent.hpp"
#include "weylchar/rootsys.hpp"
#include "weylchar/specialroots.hpp"

namespace weylchar {

/// Irreducible character in the variables u_i = e^{alpha_i}, shifted so the lowest
/// weight sits at exponent 0. A term u^e stands for the weight to_weight(e) - dual(highest).
struct CharacterResult {
    WeightVector highest_weight;
    LaurentPolynomial polynomial;
    /// Dominant weights only; every other weight has the multiplicity of its dominant representative.
    std::map<WeightVector, Integer> multiplicities;
    Integer dimension;
};

/// Signed monomial sum over the tuples of `system` with exponents at highest.
LaurentPolynomial a_polynomial(const CartanDatum& datum, const GammaSystem& system, const WeightVector& highest);

/// exact_div(A(rho + highest), A(rho)) with multiplicities and dimension; the dimension
/// is checked against the closed form.
CharacterResult character(const CartanDatum& datum, const GammaSystem& system, const WeightVector& highest);

/// prod over positive roots of (rho + highest, alpha) / (rho, alpha).
Integer weyl_dimension(const CartanDatum& datum, const WeightVector& highest);

/// Builds a GammaSystem, computes the character and compares both dimension routes.
Integer dimension(const CartanDatum& datum, const WeightVector& highest);

/// m(mu) in V(highest); 0 when mu is not a weight.
Integer multiplicity(const CharacterResult& result, const CartanDatum& datum, const WeightVector& mu);

/// Exponent of weight mu in the character of V(highest), and the inverse map.
Exponent exponent_of_weight(const CartanDatum& datum, const WeightVector& highest, const WeightVector& mu);
WeightVector weight_of_exponent(const CartanDatum& datum, const WeightVector& highest, const Exponent& e);

struct AlgebraOptions {
    TableOrder order = TableOrder::Height;
    /// Directory for serialized GammaSystems and characters; none disables the disk cache.
    std::optional<std::filesystem::path> cache_dir;
};

/// A Cartan datum together with its GammaSystem, A(rho) and a character cache.
/// Safe to share between threads.
class Algebra {
public:
    explicit Algebra(CartanDatum datum, AlgebraOptions options = {});

    const CartanDatum& datum() const { return datum_; }
    int rank() const { return datum_.rank(); }
    const std::vector<RootVector>& roots() const { return roots_; }
    const GammaSystem& system() const { return system_; }
    const LaurentPolynomial& denominator() const { return denominator_; }
    /// True when the GammaSystem came from the disk cache.
    bool loaded_from_cache() const { return loaded_from_cache_; }

    LaurentPolynomial a_polynomial(const WeightVector& highest) const;
    std::shared_ptr<const CharacterResult> character(const WeightVector& highest) const;
    Integer dimension(const WeightVector& highest) const;
    Integer multiplicity(const WeightVector& highest, const WeightVector& mu) const;

    /// Key used for cache file names: "<name>-<fingerprint>".
    std::string cache_key() const;

private:
    CharacterResult compute_character(const WeightVector& highest) const;
    std::optional<std::filesystem::path> character_path(const WeightVector& highest) const;

    CartanDatum datum_;
    AlgebraOptions options_;
    std::vector<RootVector> roots_;
    GammaSystem system_;
    LaurentPolynomial denominator_;
    bool loaded_from_cache_ = false;

    mutable std::shared_mutex mutex_;
    mutable std::map<WeightVector, std::shared_ptr<const CharacterResult>> cache_;
};

}  // namespace weylchar
