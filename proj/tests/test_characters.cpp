#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include "weylchar/characters.hpp"
#include "weylchar/error.hpp"
#include "weylchar/verify.hpp"
#include "weylchar/weyloracle.hpp"

using namespace weylchar;

namespace {

const Algebra& f4() {
    static const Algebra a(builtin_algebra("F4"));
    return a;
}

std::vector<WeightVector> labels_up_to(int rank, int s) {
    std::vector<WeightVector> out{WeightVector(rank)};
    for (int i = 0; i < rank; ++i) {
        std::vector<WeightVector> next;
        for (const auto& w : out) {
            for (int k = 0; k <= s; ++k) {
                auto v = w;
                v[i] = k;
                next.push_back(v);
            }
        }
        out = std::move(next);
    }
    return out;
}

std::filesystem::path fresh_dir(const std::string& tag) {
    const auto dir = std::filesystem::temp_directory_path() / ("weylchar_test_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST(Character, TrivialRepresentation) {
    const auto ch = f4().character(WeightVector(4));
    EXPECT_EQ(ch->polynomial, LaurentPolynomial::constant(4, 1));
    EXPECT_EQ(ch->dimension, 1);
    EXPECT_EQ(ch->multiplicities.size(), 1u);
}

TEST(Character, A1Spin3Halves) {
    const Algebra a1(builtin_algebra("A1"));
    const auto ch = a1.character(WeightVector{3});
    EXPECT_EQ(ch->polynomial, parse_polynomial("1 + u + u^2 + u^3", {"u"}));
    EXPECT_EQ(ch->dimension, 4);
    EXPECT_EQ(a1.a_polynomial(WeightVector{3}), parse_polynomial("u^4 - 1", {"u"}));
}

TEST(Character, F4DenominatorIsRootProduct) {
    const auto& a = f4().denominator();
    EXPECT_EQ(a, denominator_product(f4().datum()));
    EXPECT_EQ(a, f4().a_polynomial(WeightVector(4)));
    int plus = 0;
    int minus = 0;
    for (const auto& [e, c] : a.term_map()) (c > 0 ? plus : minus) += 1;
    EXPECT_EQ(plus, 576);
    EXPECT_EQ(minus, 576);
}

TEST(Character, F4FundamentalDimensions) {
    const std::pair<WeightVector, long> cases[] = {
        {{0, 0, 0, 1}, 26}, {{1, 0, 0, 0}, 52}, {{0, 0, 1, 0}, 273}, {{0, 1, 0, 0}, 1274}, {{0, 0, 1, 1}, 4096}};
    for (const auto& [hw, dim] : cases) {
        EXPECT_EQ(f4().dimension(hw), dim) << hw.to_string();
        EXPECT_EQ(weyl_dimension(f4().datum(), hw), dim);
        EXPECT_EQ(evaluate_at_one(f4().character(hw)->polynomial), dim);
    }
}

TEST(Character, F4Multiplicities) {
    EXPECT_EQ(f4().multiplicity(WeightVector{1, 0, 0, 0}, WeightVector(4)), 4);
    EXPECT_EQ(f4().multiplicity(WeightVector{0, 0, 0, 1}, WeightVector(4)), 2);
    EXPECT_EQ(f4().multiplicity(WeightVector{1, 0, 0, 0}, WeightVector{1, 0, 0, 0}), 1);
    // Non-dominant weights take the multiplicity of their orbit.
    EXPECT_EQ(f4().multiplicity(WeightVector{1, 0, 0, 0}, WeightVector{-1, 1, 0, 0}), 1);
    // Outside the weight diagram.
    EXPECT_EQ(f4().multiplicity(WeightVector{0, 0, 0, 1}, WeightVector{1, 0, 0, 0}), 0);
    EXPECT_EQ(f4().multiplicity(WeightVector{0, 0, 0, 1}, WeightVector{5, 0, 0, 0}), 0);
}

TEST(Character, MultiplicitiesMatchFreudenthal) {
    for (const auto* name : {"A2", "B3", "C3", "G2", "F4"}) {
        const Algebra algebra(builtin_algebra(name));
        for (const auto& hw : labels_up_to(algebra.rank(), 1)) {
            if (name == std::string("F4") && hw.labels() != std::vector<std::int64_t>{1, 0, 0, 1} &&
                hw.labels() != std::vector<std::int64_t>{0, 0, 1, 1} && hw.labels() != std::vector<std::int64_t>{1, 0, 0, 0}) {
                continue;
            }
            const auto expected = weyloracle::freudenthal_multiplicities(algebra.datum(), hw);
            EXPECT_EQ(algebra.character(hw)->multiplicities, expected) << name << " " << hw.to_string();
        }
    }
}

TEST(Character, ExactnessSweepRankAtMostFour) {
    // Labels up to 3 in rank <= 3, up to 2 for the classical rank-4 algebras and up to 1
    // for F4 (plus a few larger F4 weights): exact division, agreement with the direct
    // Weyl sum, positive coefficients.
    for (const auto* name : {"A1", "A2", "B2", "G2", "A3", "B3", "C3", "A4", "B4", "C4", "D4", "F4"}) {
        const Algebra algebra(builtin_algebra(name));
        const auto& d = algebra.datum();
        const int s = name == std::string("F4") ? 1 : (d.rank() == 4 ? 2 : 3);
        const auto group = weyloracle::enumerate_weyl(d);
        for (const auto& hw : labels_up_to(d.rank(), s)) {
            ASSERT_EQ(algebra.a_polynomial(hw), weyloracle::direct_a_polynomial(d, group, hw)) << name << hw.to_string();
            const auto ch = algebra.character(hw);
            for (const auto& [e, c] : ch->polynomial.term_map()) ASSERT_GT(c, 0);
            ASSERT_EQ(evaluate_at_one(ch->polynomial), weyl_dimension(d, hw)) << name << hw.to_string();
        }
    }
    for (const auto& hw : {WeightVector{2, 0, 0, 0}, WeightVector{0, 0, 0, 3}, WeightVector{1, 1, 1, 1}}) {
        const auto ch = f4().character(hw);
        EXPECT_EQ(ch->polynomial * f4().denominator(), f4().a_polynomial(hw));
    }
}

TEST(Character, RankFourSweepWithLabelsUpToThreeOnSimplyLacedA4) {
    const Algebra algebra(builtin_algebra("A4"));
    for (const auto& hw : labels_up_to(4, 3)) {
        const auto ch = algebra.character(hw);
        ASSERT_EQ(ch->dimension, weyl_dimension(algebra.datum(), hw)) << hw.to_string();
    }
}

TEST(Character, SpecializationCommutesWithDivision) {
    const auto hw = WeightVector{1, 0, 0, 0};
    const auto ch = f4().character(hw);
    const auto num = verify::specialize_f4_xy(f4().a_polynomial(hw));
    const auto den = verify::specialize_f4_xy(f4().denominator());
    EXPECT_EQ(exact_div(num, den), verify::specialize_f4_xy(ch->polynomial));
}

TEST(Character, GoldenSpecializedForms) {
    Exponent shift;
    const auto adjoint = verify::specialize_f4_xy(f4().character(WeightVector{1, 0, 0, 0})->polynomial);
    ASSERT_TRUE(verify::equal_up_to_monomial(adjoint, verify::parse_xy(verify::kF4AdjointXY), shift));
    EXPECT_EQ(shift.to_vector(2), (std::vector<std::int64_t>{5, 6}));
    const auto l34 = verify::specialize_f4_xy(f4().character(WeightVector{0, 0, 1, 1})->polynomial);
    ASSERT_TRUE(verify::equal_up_to_monomial(l34, verify::parse_xy(verify::kF4Lambda34XY), shift));
    EXPECT_EQ(shift.to_vector(2), (std::vector<std::int64_t>{9, 14}));
    EXPECT_EQ(evaluate_at_one(l34), 4096);
}

TEST(Character, ExponentWeightMapsAreInverse) {
    const auto hw = WeightVector{0, 0, 1, 0};
    const auto ch = f4().character(hw);
    for (const auto& [e, c] : ch->polynomial.term_map()) {
        const auto mu = weight_of_exponent(f4().datum(), hw, e);
        EXPECT_EQ(exponent_of_weight(f4().datum(), hw, mu), e);
    }
    EXPECT_TRUE(exponent_of_weight(f4().datum(), hw, -dual_weight(f4().datum(), hw)).is_zero());
    EXPECT_EQ(ch->polynomial.coefficient(exponent_of_weight(f4().datum(), hw, hw)), 1);
}

TEST(Character, RejectsBadWeights) {
    EXPECT_THROW(f4().character(WeightVector{1, 0, 0}), InvalidArgument);
    EXPECT_THROW(f4().character(WeightVector{-1, 0, 0, 0}), InvalidArgument);
    EXPECT_THROW(f4().dimension(WeightVector{0, 0, 0, -2}), InvalidArgument);
    EXPECT_THROW(weyl_dimension(f4().datum(), WeightVector{1}), InvalidArgument);
}

TEST(Character, FreeFunctionsAgreeWithAlgebra) {
    const auto& d = f4().datum();
    const auto hw = WeightVector{0, 0, 0, 2};
    const auto ch = character(d, f4().system(), hw);
    EXPECT_EQ(ch.polynomial, f4().character(hw)->polynomial);
    EXPECT_EQ(multiplicity(ch, d, WeightVector(4)), f4().multiplicity(hw, WeightVector(4)));
    EXPECT_EQ(dimension(builtin_algebra("G2"), WeightVector{1, 0}), 7);
}

TEST(Character, OtherAlgebraDimensions) {
    EXPECT_EQ(dimension(builtin_algebra("E6"), WeightVector{1, 0, 0, 0, 0, 0}), 27);
    EXPECT_EQ(dimension(builtin_algebra("G2"), WeightVector{0, 1}), 14);
    EXPECT_EQ(dimension(builtin_algebra("D5"), WeightVector{0, 0, 0, 0, 1}), 16);
    EXPECT_EQ(dimension(builtin_algebra("B3"), WeightVector{0, 0, 1}), 8);
    EXPECT_EQ(weyl_dimension(builtin_algebra("E6"), WeightVector{0, 1, 0, 0, 0, 0}), 78);
}

TEST(Cache, GammaSystemRoundTripsThroughDisk) {
    const auto dir = fresh_dir("cache");
    AlgebraOptions options;
    options.cache_dir = dir;
    const Algebra first(builtin_algebra("B3"), options);
    EXPECT_FALSE(first.loaded_from_cache());
    const auto ch = first.character(WeightVector{1, 0, 1});
    const Algebra second(builtin_algebra("B3"), options);
    EXPECT_TRUE(second.loaded_from_cache());
    EXPECT_EQ(second.system().tuples, first.system().tuples);
    EXPECT_EQ(second.system().signatures, first.system().signatures);
    EXPECT_EQ(second.character(WeightVector{1, 0, 1})->polynomial, ch->polynomial);
    std::filesystem::remove_all(dir);
}

TEST(Cache, CorruptFilesAreRebuilt) {
    const auto dir = fresh_dir("corrupt");
    AlgebraOptions options;
    options.cache_dir = dir;
    const Algebra first(builtin_algebra("G2"), options);
    const auto expected = first.character(WeightVector{1, 1})->polynomial;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        std::ofstream(entry.path()) << "{\"garbage\": true";
    }
    const Algebra second(builtin_algebra("G2"), options);
    EXPECT_FALSE(second.loaded_from_cache());
    EXPECT_EQ(second.character(WeightVector{1, 1})->polynomial, expected);
    std::filesystem::remove_all(dir);
}

TEST(Cache, KeyIncludesOrderAndFingerprint) {
    AlgebraOptions lex;
    lex.order = TableOrder::Lexicographic;
    const Algebra a(builtin_algebra("B2"));
    const Algebra b(builtin_algebra("B2"), lex);
    const Algebra c(builtin_algebra("C2"));
    EXPECT_NE(a.cache_key(), b.cache_key());
    EXPECT_NE(a.cache_key(), c.cache_key());
    EXPECT_NE(a.cache_key().find(a.datum().fingerprint()), std::string::npos);
}

TEST(Concurrency, SharedAlgebraAcrossThreads) {
    const Algebra algebra(builtin_algebra("C3"));
    const std::vector<WeightVector> weights = labels_up_to(3, 1);
    std::vector<std::thread> workers;
    std::vector<int> failures(4, 0);
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&, t] {
            for (const auto& hw : weights) {
                if (algebra.dimension(hw) != weyl_dimension(algebra.datum(), hw)) ++failures[static_cast<std::size_t>(t)];
            }
        });
    }
    for (auto& w : workers) w.join();
    for (const auto f : failures) EXPECT_EQ(f, 0);
    EXPECT_EQ(algebra.character(weights[3]).get(), algebra.character(weights[3]).get());
}

TEST(LongRunning, F4LabelsUpToTwo) {
    // About 6.5 minutes on one core; enable with WEYLCHAR_LONG_TESTS=1.
    const char* flag = std::getenv("WEYLCHAR_LONG_TESTS");
    if (flag == nullptr || std::string(flag) != "1") GTEST_SKIP() << "set WEYLCHAR_LONG_TESTS=1 to run";
    const auto& d = f4().datum();
    const auto group = weyloracle::enumerate_weyl(d);
    for (const auto& hw : labels_up_to(4, 2)) {
        ASSERT_EQ(f4().a_polynomial(hw), weyloracle::direct_a_polynomial(d, group, hw)) << hw;
        const auto ch = f4().character(hw);
        ASSERT_EQ(ch->dimension, weyl_dimension(d, hw)) << hw;
    }
}
