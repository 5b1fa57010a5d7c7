#include <gtest/gtest.h>

#include <set>

#include "weylchar/characters.hpp"
#include "weylchar/weyloracle.hpp"

using namespace weylchar;
using namespace weylchar::weyloracle;

TEST(WeylGroup, OrdersFromClosedForm) {
    const std::pair<const char*, long> cases[] = {{"A1", 2},  {"A2", 6},      {"A3", 24},  {"B2", 8},
                                                  {"B3", 48}, {"C3", 48},     {"G2", 12},  {"D4", 192},
                                                  {"F4", 1152}, {"E6", 51840}, {"A8", 362880}};
    for (const auto& [name, order] : cases) EXPECT_EQ(weyl_group_order(builtin_algebra(name)), order) << name;
}

TEST(WeylGroup, EnumerationMatchesOrderAndIsClosed) {
    for (const auto* name : {"A1", "A3", "B3", "C3", "G2", "D4", "F4"}) {
        const auto d = builtin_algebra(name);
        const auto group = enumerate_weyl(d);
        EXPECT_EQ(Integer(static_cast<unsigned long>(group.size())), weyl_group_order(d)) << name;
        std::set<IntMatrix> actions;
        for (const auto& g : group) actions.insert(g.action);
        EXPECT_EQ(actions.size(), group.size());
        // Closure under composition on a sample of pairs.
        for (std::size_t a = 0; a < group.size(); a += 7) {
            for (std::size_t b = 0; b < group.size(); b += 11) {
                EXPECT_TRUE(actions.count(compose(group[a].action, group[b].action))) << name;
            }
        }
    }
}

TEST(WeylGroup, DeterminantIsWordLengthParity) {
    const auto d = builtin_algebra("F4");
    const auto group = enumerate_weyl(d);
    int plus = 0;
    for (const auto& g : group) {
        EXPECT_EQ(g.det, determinant(g.action));
        EXPECT_EQ(g.det, g.word.size() % 2 == 0 ? 1 : -1);
        plus += g.det > 0 ? 1 : 0;
    }
    EXPECT_EQ(plus, 576);
}

TEST(WeylGroup, WordsReproduceActions) {
    const auto d = builtin_algebra("B3");
    const WeightVector probe{3, 5, 7};
    for (const auto& g : enumerate_weyl(d)) {
        WeightVector mu = probe;
        for (auto it = g.word.rbegin(); it != g.word.rend(); ++it) mu = d.reflect(mu, *it);
        EXPECT_EQ(mu, g.apply(probe));
    }
}

TEST(WeylGroup, GuardTrips) { EXPECT_THROW(enumerate_weyl(builtin_algebra("F4"), 100), Error); }

TEST(Determinant, SmallMatrices) {
    EXPECT_EQ(determinant({{2, -1}, {-1, 2}}), 3);
    EXPECT_EQ(determinant(builtin_algebra("F4").cartan_matrix()), 1);
    EXPECT_EQ(determinant(builtin_algebra("E6").cartan_matrix()), 3);
    EXPECT_EQ(determinant(builtin_algebra("D5").cartan_matrix()), 4);
}

TEST(DirectSum, A1FundamentalIsUSquaredMinusOne) {
    const auto a1 = builtin_algebra("A1");
    const auto p = direct_a_polynomial(a1, WeightVector{1});
    EXPECT_EQ(p, parse_polynomial("u^2 - 1", {"u"}));
    EXPECT_EQ(direct_a_polynomial(a1, WeightVector{0}), parse_polynomial("u - 1", {"u"}));
}

TEST(DirectSum, F4SmallestRepresentationHasDimension26) {
    const auto f4 = builtin_algebra("F4");
    const auto group = enumerate_weyl(f4);
    const auto num = direct_a_polynomial(f4, group, WeightVector{0, 0, 0, 1});
    const auto den = direct_a_polynomial(f4, group, WeightVector{0, 0, 0, 0});
    EXPECT_EQ(num.size(), 1152u);
    EXPECT_EQ(evaluate_at_one(exact_div(num, den)), 26);
}

TEST(Freudenthal, KnownMultiplicities) {
    const auto f4 = builtin_algebra("F4");
    const auto adj = freudenthal_multiplicities(f4, WeightVector{1, 0, 0, 0});
    EXPECT_EQ(adj.at(WeightVector{1, 0, 0, 0}), 1);
    EXPECT_EQ(adj.at(WeightVector{0, 0, 0, 1}), 1);
    EXPECT_EQ(adj.at(WeightVector{0, 0, 0, 0}), 4);
    const auto small = freudenthal_multiplicities(f4, WeightVector{0, 0, 0, 1});
    EXPECT_EQ(small.at(WeightVector{0, 0, 0, 0}), 2);
    const auto a2 = freudenthal_multiplicities(builtin_algebra("A2"), WeightVector{1, 1});
    EXPECT_EQ(a2.at(WeightVector{0, 0}), 2);
    const auto a1 = freudenthal_multiplicities(builtin_algebra("A1"), WeightVector{4});
    EXPECT_EQ(a1.size(), 3u);
    for (const auto& [w, m] : a1) EXPECT_EQ(m, 1);
}

TEST(Freudenthal, DimensionsAgreeWithWeylFormula) {
    for (const auto* name : {"A2", "B3", "C3", "G2", "F4"}) {
        const auto d = builtin_algebra(name);
        for (int i = 0; i < d.rank(); ++i) {
            const auto hw = WeightVector::fundamental(d.rank(), i);
            Integer total = 0;
            for (const auto& [w, m] : freudenthal_multiplicities(d, hw)) {
                total += m * static_cast<unsigned long>(weyl_orbit(d, w).size());
            }
            EXPECT_EQ(total, weyl_dimension(d, hw)) << name << " " << hw.to_string();
        }
    }
}

TEST(DominantWeights, BelowHighestWeight) {
    const auto f4 = builtin_algebra("F4");
    const auto below = dominant_weights_below(f4, WeightVector{0, 0, 0, 1});
    const std::set<WeightVector> as_set(below.begin(), below.end());
    EXPECT_EQ(as_set, (std::set<WeightVector>{{0, 0, 0, 1}, {0, 0, 0, 0}}));
    for (const auto& mu : dominant_weights_below(f4, WeightVector{1, 0, 1, 0})) EXPECT_TRUE(mu.is_dominant());
}
