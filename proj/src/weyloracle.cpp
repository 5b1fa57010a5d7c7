#include "weylchar/weyloracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "weylchar/error.hpp"

namespace weylchar::weyloracle {

WeightVector WeylElement::apply(const WeightVector& mu) const {
    const int r = mu.rank();
    WeightVector out(r);
    for (int i = 0; i < r; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < r; ++j) s += action[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * mu[j];
        out[i] = s;
    }
    return out;
}

IntMatrix compose(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    IntMatrix c(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

std::int64_t determinant(const IntMatrix& m) {
    // Bareiss fraction-free elimination.
    const std::size_t n = m.size();
    if (n == 0) return 1;
    IntMatrix a = m;
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

IntMatrix reflection_matrix(const CartanDatum& datum, int i) {
    const int r = datum.rank();
    IntMatrix m(static_cast<std::size_t>(r), std::vector<std::int64_t>(static_cast<std::size_t>(r), 0));
    for (int j = 0; j < r; ++j) {
        m[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1;
    }
    // s_i(mu)_j = mu_j - mu_i A[j][i]
    for (int j = 0; j < r; ++j) {
        m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] -= datum.cartan(j, i);
    }
    return m;
}

}  // namespace

std::vector<WeylElement> enumerate_weyl(const CartanDatum& datum, std::size_t guard) {
    const int r = datum.rank();
    std::vector<IntMatrix> gens;
    for (int i = 0; i < r; ++i) gens.push_back(reflection_matrix(datum, i));

    WeylElement id;
    id.action = IntMatrix(static_cast<std::size_t>(r), std::vector<std::int64_t>(static_cast<std::size_t>(r), 0));
    for (int i = 0; i < r; ++i) id.action[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;

    std::set<IntMatrix> seen{id.action};
    std::vector<WeylElement> out{id};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (int i = 0; i < r; ++i) {
            IntMatrix m = compose(gens[static_cast<std::size_t>(i)], out[head].action);
            if (!seen.insert(m).second) continue;
            if (out.size() >= guard) throw InvalidArgument("enumerate_weyl: group order exceeds guard");
            WeylElement e;
            e.word.reserve(out[head].word.size() + 1);
            e.word.push_back(i);
            e.word.insert(e.word.end(), out[head].word.begin(), out[head].word.end());
            e.action = std::move(m);
            e.det = -out[head].det;
            out.push_back(std::move(e));
        }
    }
    return out;
}

Integer weyl_group_order(const CartanDatum& datum) {
    Integer order = 1;
    for (int i = 2; i <= datum.rank(); ++i) order *= i;
    const auto theta = highest_root(datum);
    for (int i = 0; i < datum.rank(); ++i) order *= static_cast<long>(theta[i]);
    order *= static_cast<long>(determinant(datum.cartan_matrix()));
    return order;
}

LaurentPolynomial direct_a_polynomial(const CartanDatum& datum, const std::vector<WeylElement>& group,
                                      const WeightVector& highest) {
    if (!highest.is_dominant()) throw InvalidArgument("direct_a_polynomial: weight must be dominant");
    const auto nu = highest + WeightVector::ones(datum.rank());
    const auto shift = dual_weight(datum, nu);
    LaurentPolynomial p(datum.rank());
    for (const auto& sigma : group) {
        const auto root = datum.to_root(sigma.apply(nu) + shift);
        p.add_term(Exponent::from(root.coords()), sigma.det);
    }
    return p;
}

LaurentPolynomial direct_a_polynomial(const CartanDatum& datum, const WeightVector& highest) {
    return direct_a_polynomial(datum, enumerate_weyl(datum), highest);
}

std::vector<WeightVector> dominant_weights_below(const CartanDatum& datum, const WeightVector& highest) {
    if (!highest.is_dominant()) throw InvalidArgument("dominant_weights_below: weight must be dominant");
    std::vector<WeightVector> roots;
    for (const auto& a : positive_roots(datum)) roots.push_back(datum.to_weight(a));
    std::set<WeightVector> seen{highest};
    std::vector<WeightVector> out{highest};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& a : roots) {
            auto mu = out[head] - a;
            if (!mu.is_dominant()) continue;
            if (seen.insert(mu).second) out.push_back(std::move(mu));
        }
    }
    return out;
}

std::map<WeightVector, Integer> freudenthal_multiplicities(const CartanDatum& datum,
                                                           const WeightVector& highest) {
    const int r = datum.rank();
    const auto rho = WeightVector::ones(r);
    const auto roots = positive_roots(datum);
    auto dominant = dominant_weights_below(datum, highest);
    // Process by depth below the highest weight so every needed multiplicity is known.
    std::vector<std::pair<std::int64_t, WeightVector>> order;
    for (const auto& mu : dominant) {
        order.emplace_back(datum.to_root(highest - mu).height(), mu);
    }
    std::sort(order.begin(), order.end());

    std::map<WeightVector, Integer> mult;
    const Rational top = bilinear(datum, highest + rho, highest + rho);
    for (const auto& [depth, mu] : order) {
        if (depth == 0) {
            mult[mu] = 1;
            continue;
        }
        Rational sum = 0;
        for (const auto& alpha : roots) {
            const auto alpha_w = datum.to_weight(alpha);
            auto shifted = mu;
            for (int k = 1;; ++k) {
                shifted += alpha_w;
                const auto rep = dominant_representative(datum, shifted);
                auto it = mult.find(rep);
                if (it == mult.end()) break;
                sum += Rational(it->second) * bilinear(datum, shifted, alpha);
            }
        }
        const Rational denom = top - bilinear(datum, mu + rho, mu + rho);
        const Rational m = 2 * sum / denom;
        if (m.get_den() != 1) throw ConsistencyError("freudenthal: non-integral multiplicity");
        mult[mu] = m.get_num();
    }
    return mult;
}

}  // namespace weylchar::weyloracle
