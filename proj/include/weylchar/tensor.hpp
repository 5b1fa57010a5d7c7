#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "weylchar/characters.hpp"

namespace weylchar {

struct Decomposition {
    std::pair<WeightVector, WeightVector> factors;
    /// Sorted by Dynkin labels in decreasing graded-lex order.
    std::vector<std::pair<WeightVector, Integer>> constituents;
    /// sum of mult * dim over constituents; equals dim(factor 1) * dim(factor 2).
    Integer dim_check;
};

inline constexpr std::size_t kTensorIterationGuard = 1'000'000;

/// Multiplies the two characters and peels off irreducibles from the top.
Decomposition tensor_decompose(const Algebra& algebra, const WeightVector& first, const WeightVector& second);

/// Descending graded-lex on Dynkin labels.
bool label_grlex_greater(const WeightVector& a, const WeightVector& b);

}  // namespace weylchar
