#include "weylchar/tensor.hpp"

#include <algorithm>
#include <numeric>

#include "weylchar/error.hpp"

namespace weylchar {

bool label_grlex_greater(const WeightVector& a, const WeightVector& b) {
    const auto& x = a.labels();
    const auto& y = b.labels();
    const auto dx = std::accumulate(x.begin(), x.end(), std::int64_t{0});
    const auto dy = std::accumulate(y.begin(), y.end(), std::int64_t{0});
    if (dx != dy) return dx > dy;
    return x > y;
}

Decomposition tensor_decompose(const Algebra& algebra, const WeightVector& first, const WeightVector& second) {
    const auto& datum = algebra.datum();
    const auto c1 = algebra.character(first);
    const auto c2 = algebra.character(second);
    const auto top = first + second;

    Decomposition out;
    out.factors = {first, second};
    // Exponent e of the product stands for the weight to_weight(e) - dual(top).
    const auto top_dual = dual_weight(datum, top);
    auto rest = c1->polynomial * c2->polynomial;
    out.dim_check = 0;
    for (std::size_t iter = 0; !rest.is_zero(); ++iter) {
        if (iter >= kTensorIterationGuard) throw ConsistencyError("tensor_decompose: iteration guard exceeded");
        const auto [e, c] = rest.leading_term();
        const auto mu = datum.to_weight(RootVector(e.to_vector(datum.rank()))) - top_dual;
        if (!mu.is_dominant()) {
            throw ConsistencyError("tensor_decompose: leading term maps to non-dominant weight " + mu.to_string());
        }
        if (c <= 0) {
            throw ConsistencyError("tensor_decompose: leading coefficient " + c.get_str() + " at " + mu.to_string());
        }
        const auto piece = algebra.character(mu);
        const auto shift = datum.to_root(top_dual - dual_weight(datum, mu));
        rest -= piece->polynomial.shifted(Exponent::from(shift.coords())).scaled(c);
        out.dim_check += c * piece->dimension;
        out.constituents.emplace_back(mu, c);
    }
    std::sort(out.constituents.begin(), out.constituents.end(),
              [](const auto& a, const auto& b) { return label_grlex_greater(a.first, b.first); });
    if (out.dim_check != c1->dimension * c2->dimension) {
        throw ConsistencyError("tensor_decompose: dimension check " + out.dim_check.get_str() + " != " +
                               Integer(c1->dimension * c2->dimension).get_str());
    }
    return out;
}

}  // namespace weylchar
