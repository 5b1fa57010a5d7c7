#include <gtest/gtest.h>

#include <random>

#include "weylchar/error.hpp"
#include "weylchar/laurent.hpp"

using namespace weylchar;

namespace {

Exponent ex(std::initializer_list<std::int64_t> values) { return Exponent::from(std::vector<std::int64_t>(values)); }

LaurentPolynomial random_poly(std::mt19937& rng, int nvars, int terms, int lo = -3, int hi = 4, int cmax = 9) {
    std::uniform_int_distribution<int> edist(lo, hi);
    std::uniform_int_distribution<int> cdist(-cmax, cmax);
    LaurentPolynomial p(nvars);
    for (int t = 0; t < terms; ++t) {
        Exponent e;
        for (int i = 0; i < nvars; ++i) e[i] = edist(rng);
        p.add_term(e, cdist(rng));
    }
    return p;
}

// Schoolbook product straight from the term lists, independent of the kernel.
LaurentPolynomial naive_product(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out(a.nvars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) out.add_term(ea + eb, ca * cb);
    }
    return out;
}

std::vector<std::string> xy() { return {"x", "y"}; }

}  // namespace

TEST(Exponent, GrlexOrder) {
    EXPECT_TRUE(grlex_compare(ex({2, 0}), ex({0, 1})) > 0);
    EXPECT_TRUE(grlex_compare(ex({1, 0}), ex({0, 1})) > 0);
    EXPECT_TRUE(grlex_compare(ex({0, 1}), ex({1, 0})) < 0);
    EXPECT_TRUE(grlex_compare(ex({1, -1}), ex({1, -1})) == 0);
    EXPECT_TRUE(grlex_compare(ex({-5, 0}), ex({0, 0})) < 0);
}

TEST(Exponent, GrlexCompatibleWithMultiplication) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> dist(-4, 4);
    for (int trial = 0; trial < 500; ++trial) {
        Exponent a;
        Exponent b;
        Exponent c;
        for (int i = 0; i < 3; ++i) {
            a[i] = dist(rng);
            b[i] = dist(rng);
            c[i] = dist(rng);
        }
        EXPECT_TRUE(grlex_compare(a, b) == grlex_compare(a + c, b + c));
    }
}

TEST(Laurent, ConstructionAndCoefficients) {
    LaurentPolynomial p(2);
    EXPECT_TRUE(p.is_zero());
    p.add_term(ex({1, -2}), 3);
    p.add_term(ex({0, 0}), 1);
    EXPECT_EQ(p.size(), 2u);
    EXPECT_EQ(p.coefficient(ex({1, -2})), 3);
    EXPECT_EQ(p.coefficient(ex({5, 5})), 0);
    p.add_term(ex({1, -2}), -3);
    EXPECT_EQ(p.size(), 1u);
    EXPECT_EQ(p, LaurentPolynomial::constant(2, 1));
    EXPECT_EQ(LaurentPolynomial::constant(2, 0).size(), 0u);
}

TEST(Laurent, LeadingAndTrailingTerms) {
    const auto p = parse_polynomial("x^3 + 2x y^-1 - 7 + y^2", xy());
    EXPECT_EQ(p.leading_term().first, ex({3, 0}));
    EXPECT_EQ(p.trailing_term().first, ex({0, 0}));
    const auto terms = p.terms();
    ASSERT_EQ(terms.size(), 4u);
    for (std::size_t k = 1; k < terms.size(); ++k) EXPECT_TRUE(grlex_compare(terms[k - 1].first, terms[k].first) > 0);
    EXPECT_THROW(LaurentPolynomial(2).leading_term(), InvalidArgument);
}

TEST(Laurent, RingAxiomsOnRandomInputs) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_poly(rng, 3, 8);
        const auto b = random_poly(rng, 3, 6);
        const auto c = random_poly(rng, 3, 5);
        const auto zero = LaurentPolynomial(3);
        const auto one = LaurentPolynomial::constant(3, 1);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + zero, a);
        EXPECT_EQ(a * one, a);
        EXPECT_TRUE((a * zero).is_zero());
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a + neg(a), zero);
        EXPECT_EQ(mul(a, b), naive_product(a, b));
        EXPECT_EQ(add(a, b), a + b);
    }
}

TEST(Laurent, InPlaceOperatorsMatchFreeFunctions) {
    std::mt19937 rng(5);
    auto a = random_poly(rng, 2, 7);
    const auto b = random_poly(rng, 2, 7);
    const auto product = a * b;
    auto copy = a;
    copy *= b;
    EXPECT_EQ(copy, product);
    copy = a;
    copy -= b;
    EXPECT_EQ(copy, a + (-b));
}

TEST(Laurent, ShiftAndScale) {
    const auto p = parse_polynomial("1 + x - y", xy());
    EXPECT_EQ(p.shifted(ex({2, -1})), parse_polynomial("x^2 y^-1 + x^3 y^-1 - x^2", xy()));
    EXPECT_EQ(p.scaled(-2), parse_polynomial("-2 - 2x + 2y", xy()));
    EXPECT_TRUE(p.scaled(0).is_zero());
}

TEST(Laurent, VariableCountMismatchThrows) {
    const auto p = LaurentPolynomial::variable(2, 0);
    const auto q = LaurentPolynomial::variable(3, 0);
    EXPECT_THROW(p + q, InvalidArgument);
    EXPECT_THROW(p * q, InvalidArgument);
    EXPECT_THROW(exact_div(p, q), InvalidArgument);
    EXPECT_THROW(LaurentPolynomial::variable(2, 2), InvalidArgument);
    EXPECT_THROW(LaurentPolynomial(kMaxRank + 1), InvalidArgument);
}

TEST(ExactDiv, RecoversRandomFactors) {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const auto q = random_poly(rng, 3, 10);
        auto d = random_poly(rng, 3, 4);
        if (d.is_zero()) continue;
        EXPECT_EQ(exact_div(q * d, d), q);
    }
}

TEST(ExactDiv, Identities) {
    const auto x = LaurentPolynomial::variable(2, 0);
    const auto one = LaurentPolynomial::constant(2, 1);
    EXPECT_EQ(exact_div(x * x - one, x - one), x + one);
    EXPECT_EQ(exact_div(x, x), one);
    EXPECT_TRUE(exact_div(LaurentPolynomial(2), x - one).is_zero());
    // Monomials are units.
    EXPECT_EQ(exact_div(one, x), LaurentPolynomial::monomial(2, ex({-1, 0})));
    EXPECT_EQ(exact_div(parse_polynomial("x^6 - 1", xy()), parse_polynomial("x^2 - 1", xy())),
              parse_polynomial("x^4 + x^2 + 1", xy()));
}

TEST(ExactDiv, NonExactReportsRemainderTerm) {
    const auto num = parse_polynomial("x^2 + 1", xy());
    const auto den = parse_polynomial("x - 1", xy());
    try {
        exact_div(num, den);
        FAIL() << "expected NonExactDivision";
    } catch (const NonExactDivision& e) {
        EXPECT_NE(e.coefficient(), 0);
        EXPECT_NE(std::string(e.what()).find("non-exact"), std::string::npos);
    }
    EXPECT_THROW(exact_div(num, LaurentPolynomial(2)), InvalidArgument);
    EXPECT_THROW(exact_div(parse_polynomial("x + y", xy()), parse_polynomial("x - y", xy())), ConsistencyError);
}

TEST(ExactDiv, BigCoefficientsFallBackToGmp) {
    const auto x = LaurentPolynomial::variable(1, 0);
    const auto one = LaurentPolynomial::constant(1, 1);
    auto big = one;
    for (int k = 0; k < 90; ++k) big *= (x + one);
    // Central binomial coefficient of 90 is ~1e26, beyond 64 bits.
    EXPECT_GT(big.coefficient(Exponent::from({45})), Integer("100000000000000000000000000"));
    auto quotient = exact_div(big, x + one);
    auto expected = one;
    for (int k = 0; k < 89; ++k) expected *= (x + one);
    EXPECT_EQ(quotient, expected);
    const Integer huge("340282366920938463463374607431768211457");
    const auto scaled = big.scaled(huge);
    EXPECT_EQ(exact_div(scaled, big), LaurentPolynomial::constant(1, huge));
    EXPECT_EQ(exact_div(scaled, LaurentPolynomial::constant(1, huge)), big);
    EXPECT_EQ(scaled * (x - one), naive_product(scaled, x - one));
}

TEST(Specialize, IsARingHomomorphism) {
    std::mt19937 rng(29);
    const auto [assignment, names] = parse_merge_spec("x,x,y,y", 4);
    ASSERT_EQ(names, (std::vector<std::string>{"x", "y"}));
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_poly(rng, 4, 7);
        const auto b = random_poly(rng, 4, 7);
        EXPECT_EQ(specialize(a * b, assignment, 2), specialize(a, assignment, 2) * specialize(b, assignment, 2));
        EXPECT_EQ(specialize(a + b, assignment, 2), specialize(a, assignment, 2) + specialize(b, assignment, 2));
        EXPECT_EQ(evaluate_at_one(specialize(a, assignment, 2)), evaluate_at_one(a));
    }
}

TEST(Specialize, MergeSpecForms) {
    const auto [assignment, names] = parse_merge_spec("x, 1, y, x", 4);
    EXPECT_EQ(names, (std::vector<std::string>{"x", "y"}));
    EXPECT_TRUE(assignment[1].is_zero());
    EXPECT_EQ(assignment[3], Exponent::unit(0));
    const auto p = LaurentPolynomial::monomial(4, ex({1, 5, 2, 3}));
    EXPECT_EQ(specialize(p, assignment, 2), LaurentPolynomial::monomial(2, ex({4, 2})));
    EXPECT_THROW(parse_merge_spec("x,y", 4), InvalidArgument);
    EXPECT_THROW(parse_merge_spec("x,,y,y", 4), InvalidArgument);
}

TEST(EvaluateAtOne, SumsCoefficients) {
    EXPECT_EQ(evaluate_at_one(parse_polynomial("3x^2 - y^-1 + 5", xy())), 7);
    EXPECT_EQ(evaluate_at_one(LaurentPolynomial(2)), 0);
}

TEST(Formatting, ToStringUsesMiddleDotAndDefaults) {
    const auto p = LaurentPolynomial::monomial(2, ex({3, -1}), 2) - LaurentPolynomial::variable(2, 1) +
                   LaurentPolynomial::constant(2, 1);
    EXPECT_EQ(p.to_string(), "2·u1^3·u2^-1 - u2 + 1");
    EXPECT_EQ(p.to_string(xy()), "2·x^3·y^-1 - y + 1");
    EXPECT_EQ(LaurentPolynomial(2).to_string(), "0");
}

TEST(Formatting, ParseRoundTrip) {
    std::mt19937 rng(31);
    const std::vector<std::string> names{"u1", "u2", "u3"};
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = random_poly(rng, 3, 9);
        EXPECT_EQ(parse_polynomial(p.to_string(), names), p);
    }
}

TEST(Parse, ProductsPowersAndPrefactors) {
    EXPECT_EQ(parse_polynomial("(1 + x)^2", xy()), parse_polynomial("1 + 2x + x^2", xy()));
    EXPECT_EQ(parse_polynomial("x^2y^3", xy()), LaurentPolynomial::monomial(2, ex({2, 3})));
    EXPECT_EQ(parse_polynomial("x^-1 y^-2 (x + y)", xy()), parse_polynomial("y^-2 + x^-1 y^-1", xy()));
    EXPECT_EQ(parse_polynomial("2*x·y", xy()), LaurentPolynomial::monomial(2, ex({1, 1}), 2));
    EXPECT_EQ(parse_polynomial("(-1 + x)^3", xy()), parse_polynomial("x^3 - 3x^2 + 3x - 1", xy()));
    EXPECT_EQ(parse_polynomial("-(x - y)", xy()), parse_polynomial("y - x", xy()));
}

TEST(Parse, RejectsMalformedText) {
    EXPECT_THROW(parse_polynomial("x +", xy()), InvalidArgument);
    EXPECT_THROW(parse_polynomial("(x", xy()), InvalidArgument);
    EXPECT_THROW(parse_polynomial("z", xy()), InvalidArgument);
    EXPECT_THROW(parse_polynomial("(1 + x)^-1", xy()), InvalidArgument);
}
