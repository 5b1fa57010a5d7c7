#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "weylchar/characters.hpp"
#include "weylchar/specialroots.hpp"

namespace weylchar::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Published F4 special-root data in its printed row order (tuples zero-based here).
struct PublishedTables {
    GammaTable tables;
    std::vector<GammaTuple> tuples;
    std::vector<int> signatures;
};

std::string_view f4_published_json();
const PublishedTables& f4_published_tables();

/// Published F4 expressions in x = u1 = u2, y = u3 = u4, including their monomial prefactors.
inline constexpr std::string_view kF4DenominatorXY =
    "x^-23 y^-32 (1 + x)(1 + y)(-1 + x)^3 (-1 + y)^3 (-1 + x y)^4 (1 + x y)^2 (-1 + x^2 y)"
    "(-1 + x y^2)^4 (1 + x y^2)(1 + x y + x^2 y^2)(-1 + x^3 y^2)(-1 + x y^3)(-1 + x^2 y^3)^2"
    "(1 + x^2 y^3)(-1 + x y^4)(1 + x y^2 + x^2 y^4)(-1 + x^3 y^4)^2 (-1 + x^3 y^5)(-1 + x^5 y^6)";

inline constexpr std::string_view kF4AdjointXY =
    "x^-5 y^-6 (1 + x^2 y^2)(1 + x + x^2 + x^2 y + x^2 y^2 + x^2 y^3 + x^3 y^3 + x^2 y^4"
    " + 2 x^3 y^4 + x^4 y^4 + x^5 y^4 + x^3 y^5 + x^5 y^5 + x^3 y^6 + x^4 y^6 + 2 x^5 y^6 + x^6 y^6"
    " + x^5 y^7 + x^6 y^7 + x^6 y^8 + x^6 y^9 + x^6 y^10 + x^7 y^10 + x^8 y^10)";

inline constexpr std::string_view kF4Lambda34XY =
    "x^-9 y^-14 (1 + y)^2 (1 + x y)^2 (1 + x^2 y)(1 + y^2)(1 + x y^2)(1 + x^2 y^2)(1 - x y + x^2 y^2)"
    "(1 + x y^3)(1 + x^2 y^3)(1 + x^3 y^4)(1 + x^3 y^5)";

/// V(l1) (x) V(l3 + l4) in the published order, with multiplicities.
std::vector<std::pair<WeightVector, int>> f4_tensor_expected();

/// Polynomial in x, y parsed from one of the strings above.
LaurentPolynomial parse_xy(std::string_view text);

/// u -> (x, x, y, y).
LaurentPolynomial specialize_f4_xy(const LaurentPolynomial& p);

/// If a == m * b for a single monomial m, returns true and sets shift to the exponent of m.
bool equal_up_to_monomial(const LaurentPolynomial& a, const LaurentPolynomial& b, Exponent& shift);

// The nine F4 acceptance checks; `f4` must be built from builtin_algebra("F4").
CheckResult check_tuple_count(const Algebra& f4);
CheckResult check_table_contents(const Algebra& f4);
CheckResult check_signatures(const Algebra& f4);
CheckResult check_denominator(const Algebra& f4);
CheckResult check_golden_characters(const Algebra& f4);
CheckResult check_dimensions(const Algebra& f4);
CheckResult check_tensor_example(const Algebra& f4);
CheckResult check_oracle_sweep(const Algebra& f4);
CheckResult check_inversion_symmetry(const Algebra& f4);

std::vector<CheckResult> run_f4(const Algebra& f4);

/// Oracle checks valid for any algebra: GammaSystem invariants, denominator identity,
/// direct Weyl sums for labels <= 1 (when |W| is small enough), dimensions, Freudenthal.
std::vector<CheckResult> run_generic(const Algebra& algebra);

/// Direct-sum and multiplicity checks for one algebra over all labels in {0, 1}.
CheckResult sweep_algebra(const Algebra& algebra);

}  // namespace weylchar::verify
