#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "weylchar/error.hpp"
#include "weylchar/rootsys.hpp"

namespace weylchar {

/// Exponent vector of a Laurent monomial, stored inline. Slots at and beyond the
/// polynomial's variable count are always zero.
struct Exponent {
    std::array<std::int32_t, kMaxRank> v{};

    Exponent() = default;
    static Exponent from(const std::vector<std::int64_t>& values);
    static Exponent unit(int i);

    std::int32_t operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
    std::int32_t& operator[](int i) { return v[static_cast<std::size_t>(i)]; }

    std::int64_t degree() const;
    bool is_zero() const;
    std::vector<std::int64_t> to_vector(int nvars) const;

    Exponent& operator+=(const Exponent& o);
    Exponent& operator-=(const Exponent& o);
    friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
    friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }
    friend Exponent operator-(Exponent a);
    friend Exponent operator*(std::int64_t k, Exponent a);

    friend bool operator==(const Exponent&, const Exponent&) = default;
};

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept;
};

/// Graded-lexicographic comparison: total degree first, then lexicographic with the
/// first variable most significant. A total order compatible with multiplication.
std::strong_ordering grlex_compare(const Exponent& a, const Exponent& b);

struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const { return grlex_compare(a, b) > 0; }
};

/// Sparse multivariate Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Terms live in a hash map; canonical (graded-lex descending) order is imposed only
/// when terms are listed or serialized. Zero coefficients are never stored.
class LaurentPolynomial {
public:
    using Term = std::pair<Exponent, Integer>;
    using TermMap = absl::flat_hash_map<Exponent, Integer, ExponentHash>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(int nvars);

    static LaurentPolynomial constant(int nvars, const Integer& c);
    static LaurentPolynomial monomial(int nvars, const Exponent& e, const Integer& c = 1);
    static LaurentPolynomial variable(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& term_map() const { return terms_; }

    /// Coefficient of u^e (zero when absent).
    Integer coefficient(const Exponent& e) const;
    /// Adds c u^e, removing the entry if it cancels.
    void add_term(const Exponent& e, const Integer& c);

    /// Terms in canonical order (graded-lex descending).
    std::vector<Term> terms() const;
    /// Greatest term under graded-lex; polynomial must be nonzero.
    Term leading_term() const;
    /// Smallest term under graded-lex; polynomial must be nonzero.
    Term trailing_term() const;

    /// Multiplies by u^e.
    LaurentPolynomial shifted(const Exponent& e) const;
    LaurentPolynomial scaled(const Integer& c) const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator-(const LaurentPolynomial& a);

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

    /// Human-readable form, e.g. "2·u1^3·u2^-1 - u2 + 1". Variable names default to u1..ur.
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void require_same(const LaurentPolynomial& o, const char* op) const;

    int nvars_ = 0;
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.to_string(); }

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial neg(const LaurentPolynomial& p);

/// Raised by exact_div when the divisor does not divide the dividend.
class NonExactDivision : public ConsistencyError {
public:
    NonExactDivision(int nvars, Exponent exponent, Integer coefficient);
    const Exponent& exponent() const { return exponent_; }
    const Integer& coefficient() const { return coefficient_; }

private:
    Exponent exponent_;
    Integer coefficient_;
};

/// q with q * den == num. Cancels the graded-lex leading term of the running remainder
/// against the leading term of den; throws NonExactDivision carrying the offending
/// remainder term when division is not exact.
LaurentPolynomial exact_div(const LaurentPolynomial& num, const LaurentPolynomial& den);

/// Substitutes u_i -> (monomial assignment[i]) in target_nvars variables and recollects.
LaurentPolynomial specialize(const LaurentPolynomial& p, const std::vector<Exponent>& assignment,
                             int target_nvars);

/// Parses a merge spec such as "x,x,y,y": one name per variable, equal names merge,
/// and "1" sends a variable to the constant 1.
/// Returns the assignment plus the distinct target names in first-seen order.
std::pair<std::vector<Exponent>, std::vector<std::string>> parse_merge_spec(const std::string& spec,
                                                                              int nvars);

/// Parses sums and products of integers and the given variable names, with
/// parentheses, juxtaposition or '*' for products, and integer powers ("x^-5", "(1+y)^2").
/// Negative powers are allowed on monomials only. Variable matching is longest-name-first,
/// so "x^2y^3" reads as x^2 * y^3.
LaurentPolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);

/// Sum of all coefficients (u_i = 1).
Integer evaluate_at_one(const LaurentPolynomial& p);

}  // namespace weylchar
