#include "weylchar/specialroots.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "weylchar/error.hpp"
#include "weylchar/weyloracle.hpp"

namespace weylchar {

namespace {

// Integer-scaled Gram matrix of the fundamental weights, used to test the pairwise
// orbit conditions (lambda_i - gamma_i, lambda_j - gamma_j) = (lambda_i, lambda_j)
// without rational arithmetic in the search loop.
class OrbitConditions {
public:
    OrbitConditions(const CartanDatum& datum, const GammaTable& tables) : rank_(datum.rank()) {
        Integer scale = 1;
        for (int a = 0; a < rank_; ++a) {
            for (int b = 0; b < rank_; ++b) {
                mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), datum.weight_form(a, b).get_den_mpz_t());
            }
        }
        gram_.assign(sz(rank_), std::vector<std::int64_t>(sz(rank_)));
        for (int a = 0; a < rank_; ++a) {
            for (int b = 0; b < rank_; ++b) {
                const Rational v = datum.weight_form(a, b) * scale;
                gram_[sz(a)][sz(b)] = v.get_num().get_si();
            }
        }
        images_.resize(sz(rank_));
        dual_.resize(sz(rank_));
        for (int i = 0; i < rank_; ++i) {
            const auto lambda = WeightVector::fundamental(rank_, i);
            for (const auto& gamma : tables.entries[sz(i)]) {
                const auto w = lambda - datum.to_weight(gamma);
                std::vector<std::int64_t> h(sz(rank_), 0);
                for (int a = 0; a < rank_; ++a) {
                    for (int b = 0; b < rank_; ++b) h[sz(a)] += gram_[sz(a)][sz(b)] * w[b];
                }
                images_[sz(i)].push_back(w.labels());
                dual_[sz(i)].push_back(std::move(h));
            }
        }
    }

    bool holds(int i, std::size_t index_i, int j, std::size_t index_j) const {
        const auto& h = dual_[sz(i)][index_i];
        const auto& w = images_[sz(j)][index_j];
        std::int64_t s = 0;
        for (int a = 0; a < rank_; ++a) s += h[sz(a)] * w[sz(a)];
        return s == gram_[sz(i)][sz(j)];
    }

private:
    static std::size_t sz(int i) { return static_cast<std::size_t>(i); }

    int rank_;
    std::vector<std::vector<std::int64_t>> gram_;
    // images_[i][I] = Dynkin labels of lambda_i - gamma_i(I); dual_ = scaled Gram times that.
    std::vector<std::vector<std::vector<std::int64_t>>> images_;
    std::vector<std::vector<std::vector<std::int64_t>>> dual_;
};

bool height_order(const RootVector& a, const RootVector& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a < b;
}

void sort_table(std::vector<RootVector>& entries, TableOrder order) {
    if (order == TableOrder::Height) {
        std::sort(entries.begin(), entries.end(), height_order);
    } else {
        std::sort(entries.begin(), entries.end());
    }
}

// Per table entry: (2 / (alpha_i, alpha_i)) (lambda_i - gamma, nu), exact.
std::vector<std::vector<Rational>> entry_pairings(const CartanDatum& datum, const GammaTable& tables,
                                                  const WeightVector& nu) {
    const int r = datum.rank();
    std::vector<std::vector<Rational>> out(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        const auto lambda = WeightVector::fundamental(r, i);
        for (const auto& gamma : tables.entries[static_cast<std::size_t>(i)]) {
            const Rational v = bilinear(datum, lambda - datum.to_weight(gamma), nu) / datum.norm(i);
            out[static_cast<std::size_t>(i)].push_back(v);
        }
    }
    return out;
}

std::vector<Exponent> tuple_exponents(const CartanDatum& datum, const GammaTable& tables,
                                      const std::vector<GammaTuple>& tuples, const WeightVector& highest) {
    if (highest.rank() != datum.rank()) throw InvalidArgument("exponents: rank mismatch");
    if (!highest.is_dominant()) throw InvalidArgument("exponents: weight must be dominant");
    const int r = datum.rank();
    const auto nu = highest + WeightVector::ones(r);
    const auto pairings = entry_pairings(datum, tables, nu);
    const auto shift = datum.root_coords(dual_weight(datum, nu));

    // Integral values per table entry after the shift.
    std::vector<std::vector<std::int64_t>> values(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < pairings[static_cast<std::size_t>(i)].size(); ++k) {
            const Rational v = pairings[static_cast<std::size_t>(i)][k] + shift[static_cast<std::size_t>(i)];
            if (v.get_den() != 1) {
                throw ConsistencyError("exponents: non-integral exponent " + v.get_str() + " for index " +
                                       std::to_string(i + 1) + ", row " + std::to_string(k + 1));
            }
            values[static_cast<std::size_t>(i)].push_back(v.get_num().get_si());
        }
    }
    std::vector<Exponent> out;
    out.reserve(tuples.size());
    for (const auto& t : tuples) {
        Exponent e;
        for (int i = 0; i < r; ++i) {
            e[i] = static_cast<std::int32_t>(values[static_cast<std::size_t>(i)][t[static_cast<std::size_t>(i)]]);
        }
        out.push_back(e);
    }
    return out;
}

}  // namespace

GammaTable build_gamma_tables(const CartanDatum& datum, TableOrder order) {
    const int r = datum.rank();
    GammaTable tables;
    tables.entries.resize(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        const auto lambda = WeightVector::fundamental(r, i);
        const Rational norm = bilinear(datum, lambda, lambda);
        auto& entries = tables.entries[static_cast<std::size_t>(i)];
        for (const auto& mu : weyl_orbit(datum, lambda)) {
            auto gamma = datum.to_root(lambda - mu);
            if (!gamma.is_nonnegative()) {
                throw ConsistencyError("build_gamma_tables: candidate " + gamma.to_string() +
                                       " is not in the positive root lattice");
            }
            if (bilinear(datum, mu, mu) != norm) {
                throw ConsistencyError("build_gamma_tables: orbit element changed length");
            }
            entries.push_back(std::move(gamma));
        }
        sort_table(entries, order);
    }
    return tables;
}

std::vector<GammaTuple> build_tuples(const CartanDatum& datum, const GammaTable& tables) {
    const int r = datum.rank();
    if (tables.rank() != r) throw InvalidArgument("build_tuples: table rank mismatch");
    const OrbitConditions cond(datum, tables);

    std::vector<GammaTuple> out;
    GammaTuple current(static_cast<std::size_t>(r), 0);
    // Iterative depth-first search; current[i] is the candidate under test at depth i.
    int depth = 0;
    current[0] = 0;
    while (depth >= 0) {
        const auto di = static_cast<std::size_t>(depth);
        if (current[di] >= tables.size(depth)) {
            --depth;
            if (depth >= 0) ++current[static_cast<std::size_t>(depth)];
            continue;
        }
        bool ok = cond.holds(depth, current[di], depth, current[di]);
        for (int j = 0; ok && j < depth; ++j) {
            ok = cond.holds(j, current[static_cast<std::size_t>(j)], depth, current[di]);
        }
        if (!ok) {
            ++current[di];
            continue;
        }
        if (depth + 1 == r) {
            out.push_back(current);
            ++current[di];
        } else {
            ++depth;
            current[static_cast<std::size_t>(depth)] = 0;
        }
    }

    const Integer expected = weyloracle::weyl_group_order(datum);
    if (Integer(static_cast<unsigned long>(out.size())) != expected) {
        throw ConsistencyError("build_tuples: found " + std::to_string(out.size()) + " tuples, expected |W| = " +
                               expected.get_str());
    }
    return out;
}

LaurentPolynomial denominator_product(const CartanDatum& datum) {
    const int r = datum.rank();
    LaurentPolynomial p = LaurentPolynomial::constant(r, 1);
    // positive_roots is already sorted by height.
    for (const auto& alpha : positive_roots(datum)) {
        // p * (u^alpha - 1)
        auto next = p.shifted(Exponent::from(alpha.coords()));
        next -= p;
        p = std::move(next);
    }
    return p;
}

GammaSystem assign_signatures(const CartanDatum& datum, GammaTable tables, std::vector<GammaTuple> tuples) {
    const auto product = denominator_product(datum);
    const auto xi0 = tuple_exponents(datum, tables, tuples, WeightVector(datum.rank()));

    GammaSystem system;
    system.signatures.reserve(tuples.size());
    std::unordered_map<Exponent, std::size_t, ExponentHash> matched;
    for (std::size_t a = 0; a < tuples.size(); ++a) {
        const Integer c = product.coefficient(xi0[a]);
        if (c == 0) {
            throw ConsistencyError("assign_signatures: tuple " + std::to_string(a + 1) +
                                   " has no monomial in the denominator product");
        }
        if (c != 1 && c != -1) {
            throw ConsistencyError("assign_signatures: coefficient " + c.get_str() + " is not +-1");
        }
        if (!matched.emplace(xi0[a], a).second) {
            throw ConsistencyError("assign_signatures: two tuples share one monomial");
        }
        system.signatures.push_back(static_cast<int>(c.get_si()));
    }
    if (matched.size() != product.size()) {
        throw ConsistencyError("assign_signatures: " + std::to_string(product.size() - matched.size()) +
                               " monomials of the denominator product are unmatched");
    }
    system.tables = std::move(tables);
    system.tuples = std::move(tuples);
    return system;
}

GammaSystem build_gamma_system(const CartanDatum& datum, TableOrder order) {
    auto tables = build_gamma_tables(datum, order);
    auto tuples = build_tuples(datum, tables);
    return assign_signatures(datum, std::move(tables), std::move(tuples));
}

std::vector<Exponent> exponents(const CartanDatum& datum, const GammaSystem& system,
                                const WeightVector& highest) {
    return tuple_exponents(datum, system.tables, system.tuples, highest);
}

std::vector<std::vector<Rational>> raw_exponents(const CartanDatum& datum, const GammaSystem& system,
                                                 const WeightVector& highest) {
    if (!highest.is_dominant()) throw InvalidArgument("exponents: weight must be dominant");
    const auto nu = highest + WeightVector::ones(datum.rank());
    const auto pairings = entry_pairings(datum, system.tables, nu);
    std::vector<std::vector<Rational>> out;
    out.reserve(system.tuples.size());
    for (const auto& t : system.tuples) {
        std::vector<Rational> row;
        for (int i = 0; i < datum.rank(); ++i) {
            row.push_back(pairings[static_cast<std::size_t>(i)][t[static_cast<std::size_t>(i)]]);
        }
        out.push_back(std::move(row));
    }
    return out;
}

GammaSystem reorder(const GammaSystem& system, TableOrder order) {
    const int r = system.tables.rank();
    GammaSystem out;
    out.tables = system.tables;
    std::vector<std::vector<std::uint32_t>> remap(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        auto& entries = out.tables.entries[static_cast<std::size_t>(i)];
        sort_table(entries, order);
        const auto& old = system.tables.entries[static_cast<std::size_t>(i)];
        for (const auto& g : old) {
            const auto pos = std::find(entries.begin(), entries.end(), g) - entries.begin();
            remap[static_cast<std::size_t>(i)].push_back(static_cast<std::uint32_t>(pos));
        }
    }
    std::vector<std::pair<GammaTuple, int>> rows;
    rows.reserve(system.tuples.size());
    for (std::size_t a = 0; a < system.tuples.size(); ++a) {
        GammaTuple t(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) {
            t[static_cast<std::size_t>(i)] = remap[static_cast<std::size_t>(i)][system.tuples[a][static_cast<std::size_t>(i)]];
        }
        rows.emplace_back(std::move(t), system.signatures[a]);
    }
    std::sort(rows.begin(), rows.end());
    for (auto& [t, s] : rows) {
        out.tuples.push_back(std::move(t));
        out.signatures.push_back(s);
    }
    return out;
}

void validate(const CartanDatum& datum, const GammaSystem& system) {
    const int r = datum.rank();
    if (system.tables.rank() != r) throw ConsistencyError("gamma system: table count != rank");
    for (int i = 0; i < r; ++i) {
        const auto& entries = system.tables.entries[static_cast<std::size_t>(i)];
        const auto orbit = weyl_orbit(datum, WeightVector::fundamental(r, i));
        if (entries.size() != orbit.size()) {
            throw ConsistencyError("gamma system: table " + std::to_string(i + 1) + " has " +
                                   std::to_string(entries.size()) + " rows, orbit has " +
                                   std::to_string(orbit.size()));
        }
        if (entries.empty() || !entries.front().is_zero()) {
            throw ConsistencyError("gamma system: first row of table " + std::to_string(i + 1) + " is not 0");
        }
        std::set<RootVector> unique(entries.begin(), entries.end());
        if (unique.size() != entries.size()) throw ConsistencyError("gamma system: duplicate table rows");
        for (const auto& g : entries) {
            if (g.rank() != r || !g.is_nonnegative()) {
                throw ConsistencyError("gamma system: row " + g.to_string() + " not in the positive lattice");
            }
        }
    }
    if (system.tuples.size() != system.signatures.size()) {
        throw ConsistencyError("gamma system: tuples and signatures differ in length");
    }
    const Integer expected = weyloracle::weyl_group_order(datum);
    if (Integer(static_cast<unsigned long>(system.tuples.size())) != expected) {
        throw ConsistencyError("gamma system: tuple count != |W|");
    }
    const OrbitConditions cond(datum, system.tables);
    std::set<GammaTuple> seen;
    long balance = 0;
    for (std::size_t a = 0; a < system.tuples.size(); ++a) {
        const auto& t = system.tuples[a];
        if (static_cast<int>(t.size()) != r) throw ConsistencyError("gamma system: tuple length != rank");
        for (int i = 0; i < r; ++i) {
            if (t[static_cast<std::size_t>(i)] >= system.tables.size(i)) {
                throw ConsistencyError("gamma system: tuple index out of range");
            }
        }
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j <= i; ++j) {
                if (!cond.holds(j, t[static_cast<std::size_t>(j)], i, t[static_cast<std::size_t>(i)])) {
                    throw ConsistencyError("gamma system: tuple " + std::to_string(a + 1) +
                                           " violates the orbit condition");
                }
            }
        }
        if (!seen.insert(t).second) throw ConsistencyError("gamma system: duplicate tuple");
        const int s = system.signatures[a];
        if (s != 1 && s != -1) throw ConsistencyError("gamma system: signature not +-1");
        balance += s;
    }
    if (balance != 0) throw ConsistencyError("gamma system: signatures do not sum to zero");
    const auto first = std::find(system.tuples.begin(), system.tuples.end(), GammaTuple(static_cast<std::size_t>(r), 0));
    if (first == system.tuples.end() || system.signatures[static_cast<std::size_t>(first - system.tuples.begin())] != 1) {
        throw ConsistencyError("gamma system: identity tuple missing or not +1");
    }
}

}  // namespace weylchar
