#include "weylchar/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

#include "weylchar/error.hpp"

namespace weylchar {

// ---------------------------------------------------------------------------
// RootVector / WeightVector

RootVector RootVector::simple(int rank, int i) {
    RootVector v(rank);
    v[i] = 1;
    return v;
}

std::int64_t RootVector::height() const {
    return std::accumulate(coords_.begin(), coords_.end(), std::int64_t{0});
}

bool RootVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

bool RootVector::is_nonnegative() const {
    return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c >= 0; });
}

RootVector& RootVector::operator+=(const RootVector& other) {
    if (other.rank() != rank()) throw InvalidArgument("RootVector: rank mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

RootVector& RootVector::operator-=(const RootVector& other) {
    if (other.rank() != rank()) throw InvalidArgument("RootVector: rank mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

RootVector operator*(std::int64_t k, RootVector a) {
    for (auto& c : a.coords_) c *= k;
    return a;
}

std::string RootVector::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < rank(); ++i) {
        const auto c = (*this)[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        const auto a = c < 0 ? -c : c;
        if (a != 1) os << a;
        os << "a" << (i + 1);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

WeightVector WeightVector::fundamental(int rank, int i) {
    WeightVector w(rank);
    w[i] = 1;
    return w;
}

WeightVector WeightVector::ones(int rank) {
    return WeightVector(std::vector<std::int64_t>(static_cast<std::size_t>(rank), 1));
}

bool WeightVector::is_zero() const {
    return std::all_of(labels_.begin(), labels_.end(), [](auto c) { return c == 0; });
}

bool WeightVector::is_dominant() const {
    return std::all_of(labels_.begin(), labels_.end(), [](auto c) { return c >= 0; });
}

WeightVector& WeightVector::operator+=(const WeightVector& other) {
    if (other.rank() != rank()) throw InvalidArgument("WeightVector: rank mismatch");
    for (std::size_t i = 0; i < labels_.size(); ++i) labels_[i] += other.labels_[i];
    return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& other) {
    if (other.rank() != rank()) throw InvalidArgument("WeightVector: rank mismatch");
    for (std::size_t i = 0; i < labels_.size(); ++i) labels_[i] -= other.labels_[i];
    return *this;
}

WeightVector operator-(WeightVector a) {
    for (auto& c : a.labels_) c = -c;
    return a;
}

std::string WeightVector::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << (*this)[i];
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// CartanDatum

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan inverse over Q. Returns false if singular.
bool invert(RationalMatrix m, RationalMatrix& inv) {
    const std::size_t n = m.size();
    inv.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return false;
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational p = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rational f = m[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[row][j] -= f * m[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return true;
}

// Leading principal minors of a symmetric matrix are all positive.
bool positive_definite(RationalMatrix m) {
    const std::size_t n = m.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] <= 0) return false;
        for (std::size_t row = k + 1; row < n; ++row) {
            const Rational f = m[row][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[row][j] -= f * m[k][j];
        }
    }
    return true;
}

std::string rational_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        Rational q;
        if (q.set_str(j.get<std::string>(), 10) != 0) {
            throw InvalidArgument("cartan json: bad rational '" + j.get<std::string>() + "'");
        }
        if (q.get_den() == 0) throw InvalidArgument("cartan json: zero denominator");
        q.canonicalize();
        return q;
    }
    if (j.is_number_float()) {
        const double d = j.get<double>();
        const double twice = d * 2.0;
        if (static_cast<double>(static_cast<long>(twice)) == twice) {
            Rational q(static_cast<long>(twice), 2);
            q.canonicalize();
            return q;
        }
        const double thrice = d * 3.0;
        if (static_cast<double>(static_cast<long>(thrice)) == thrice) {
            Rational q(static_cast<long>(thrice), 3);
            q.canonicalize();
            return q;
        }
        throw InvalidArgument("cartan json: use \"p/q\" strings for non-half-integer norms");
    }
    throw InvalidArgument("cartan json: norms must be numbers or \"p/q\" strings");
}

}  // namespace

CartanDatum::CartanDatum(IntMatrix matrix, std::vector<Rational> norms, std::string name)
    : rank_(static_cast<int>(matrix.size())),
      name_(std::move(name)),
      cartan_(std::move(matrix)),
      norms_(std::move(norms)) {
    if (rank_ < 1 || rank_ > kMaxRank) {
        throw InvalidArgument("Cartan matrix rank must be in 1.." + std::to_string(kMaxRank));
    }
    if (static_cast<int>(norms_.size()) != rank_) {
        throw InvalidArgument("root norms: expected " + std::to_string(rank_) + " entries");
    }
    for (int i = 0; i < rank_; ++i) {
        if (static_cast<int>(cartan_[idx(i)].size()) != rank_) {
            throw InvalidArgument("Cartan matrix must be square");
        }
        if (norms_[idx(i)] <= 0) throw InvalidArgument("root norms must be positive");
    }
    for (int i = 0; i < rank_; ++i) {
        for (int j = 0; j < rank_; ++j) {
            const auto a = cartan(i, j);
            if (i == j) {
                if (a != 2) throw InvalidArgument("Cartan matrix: diagonal entries must be 2");
                continue;
            }
            if (a > 0) throw InvalidArgument("Cartan matrix: off-diagonal entries must be <= 0");
            if ((a == 0) != (cartan(j, i) == 0)) {
                throw InvalidArgument("Cartan matrix: A[i][j] = 0 must imply A[j][i] = 0");
            }
            if (norms_[idx(i)] * a != norms_[idx(j)] * cartan(j, i)) {
                throw InvalidArgument("Cartan matrix is not symmetrized by the given norms");
            }
        }
    }

    root_gram_.assign(idx(rank_), std::vector<Rational>(idx(rank_)));
    RationalMatrix a(idx(rank_), std::vector<Rational>(idx(rank_)));
    for (int i = 0; i < rank_; ++i) {
        for (int j = 0; j < rank_; ++j) {
            root_gram_[idx(i)][idx(j)] = norms_[idx(i)] * cartan(i, j);
            a[idx(i)][idx(j)] = cartan(i, j);
        }
    }
    if (!positive_definite(root_gram_)) {
        throw InvalidArgument("Cartan matrix is not of finite type (form not positive definite)");
    }
    if (!invert(a, cartan_inverse_)) throw InvalidArgument("Cartan matrix is singular");

    // labels_j = sum_i A[j][i] n_i, so root coordinates of lambda_j are column j of A^-1,
    // and (lambda_i, lambda_j) = d_i (A^-1)[i][j].
    weight_gram_.assign(idx(rank_), std::vector<Rational>(idx(rank_)));
    for (int i = 0; i < rank_; ++i) {
        for (int j = 0; j < rank_; ++j) {
            weight_gram_[idx(i)][idx(j)] = norms_[idx(i)] * cartan_inverse_[idx(i)][idx(j)];
        }
    }
}

CartanDatum CartanDatum::from_cartan(IntMatrix cartan, std::string name) {
    const int n = static_cast<int>(cartan.size());
    if (n < 1 || n > kMaxRank) {
        throw InvalidArgument("Cartan matrix rank must be in 1.." + std::to_string(kMaxRank));
    }
    for (const auto& row : cartan) {
        if (static_cast<int>(row.size()) != n) throw InvalidArgument("Cartan matrix must be square");
    }
    std::vector<Rational> d(static_cast<std::size_t>(n), Rational(0));
    for (int start = 0; start < n; ++start) {
        if (d[static_cast<std::size_t>(start)] != 0) continue;
        d[static_cast<std::size_t>(start)] = 1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < n; ++j) {
                const auto aij = cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                const auto aji = cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                if (i == j || aij == 0 || d[static_cast<std::size_t>(j)] != 0) continue;
                if (aji == 0) throw InvalidArgument("Cartan matrix: A[i][j] = 0 must imply A[j][i] = 0");
                Rational ratio(aij, aji);
                ratio.canonicalize();
                d[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(i)] * ratio;
                queue.push_back(j);
            }
        }
    }
    // Scale each entry so that all are integers with the smallest equal to 1 in each
    // component; one global scale is enough because simple algebras are connected.
    Integer den_lcm = 1;
    for (const auto& q : d) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    Integer num_gcd = 0;
    for (auto& q : d) {
        q *= den_lcm;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
    }
    if (num_gcd > 1) {
        for (auto& q : d) q /= num_gcd;
    }
    return CartanDatum(std::move(cartan), std::move(d), std::move(name));
}

std::vector<Rational> CartanDatum::root_coords(const WeightVector& w) const {
    if (w.rank() != rank_) throw InvalidArgument("weight rank mismatch");
    std::vector<Rational> n(idx(rank_), Rational(0));
    for (int i = 0; i < rank_; ++i) {
        for (int j = 0; j < rank_; ++j) {
            if (w[j] != 0) n[idx(i)] += cartan_inverse_[idx(i)][idx(j)] * Rational(w[j]);
        }
    }
    return n;
}

WeightVector CartanDatum::to_weight(const RootVector& v) const {
    if (v.rank() != rank_) throw InvalidArgument("root vector rank mismatch");
    WeightVector w(rank_);
    for (int j = 0; j < rank_; ++j) {
        std::int64_t s = 0;
        for (int i = 0; i < rank_; ++i) s += cartan(j, i) * v[i];
        w[j] = s;
    }
    return w;
}

RootVector CartanDatum::to_root(const WeightVector& w) const {
    const auto n = root_coords(w);
    RootVector v(rank_);
    for (int i = 0; i < rank_; ++i) {
        if (n[idx(i)].get_den() != 1) {
            throw InvalidArgument("weight " + w.to_string() + " is not in the root lattice");
        }
        v[i] = n[idx(i)].get_num().get_si();
    }
    return v;
}

WeightVector CartanDatum::reflect(const WeightVector& w, int i) const {
    WeightVector r = w;
    reflect_in_place(r, i);
    return r;
}

void CartanDatum::reflect_in_place(WeightVector& w, int i) const {
    const auto k = w[i];
    if (k == 0) return;
    for (int j = 0; j < rank_; ++j) w[j] -= k * cartan(j, i);
}

std::string CartanDatum::canonical_string() const {
    std::ostringstream os;
    os << "cartan:";
    for (int i = 0; i < rank_; ++i) {
        os << (i ? ";" : "");
        for (int j = 0; j < rank_; ++j) os << (j ? "," : "") << cartan(i, j);
    }
    os << "|norms:";
    for (int i = 0; i < rank_; ++i) os << (i ? "," : "") << rational_string(norm(i));
    return os.str();
}

std::string CartanDatum::fingerprint() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canonical_string()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

// ---------------------------------------------------------------------------
// Bilinear form

namespace {

void check_rank(const CartanDatum& datum, int a, int b) {
    if (a != datum.rank() || b != datum.rank()) {
        throw InvalidArgument("bilinear: dimension mismatch");
    }
}

}  // namespace

Rational bilinear(const CartanDatum& datum, const RootVector& x, const RootVector& y) {
    check_rank(datum, x.rank(), y.rank());
    Rational s = 0;
    for (int i = 0; i < datum.rank(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < datum.rank(); ++j) {
            if (y[j] != 0) s += datum.root_form(i, j) * Rational(x[i] * y[j]);
        }
    }
    return s;
}

Rational bilinear(const CartanDatum& datum, const WeightVector& x, const RootVector& y) {
    check_rank(datum, x.rank(), y.rank());
    // (lambda_i, alpha_j) = delta_ij d_j
    Rational s = 0;
    for (int i = 0; i < datum.rank(); ++i) s += datum.norm(i) * Rational(x[i] * y[i]);
    return s;
}

Rational bilinear(const CartanDatum& datum, const RootVector& x, const WeightVector& y) {
    return bilinear(datum, y, x);
}

Rational bilinear(const CartanDatum& datum, const WeightVector& x, const WeightVector& y) {
    check_rank(datum, x.rank(), y.rank());
    Rational s = 0;
    for (int i = 0; i < datum.rank(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < datum.rank(); ++j) {
            if (y[j] != 0) s += datum.weight_form(i, j) * Rational(x[i] * y[j]);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Roots, orbits

namespace {

constexpr std::int64_t kMaxRootHeight = 1000;

bool root_order(const RootVector& a, const RootVector& b) {
    const auto ha = a.height();
    const auto hb = b.height();
    if (ha != hb) return ha < hb;
    return a > b;
}

}  // namespace

std::vector<RootVector> positive_roots(const CartanDatum& datum) {
    const int r = datum.rank();
    std::set<RootVector> seen;
    std::vector<RootVector> level;
    for (int i = 0; i < r; ++i) {
        level.push_back(RootVector::simple(r, i));
        seen.insert(level.back());
    }
    std::vector<RootVector> all = level;
    for (std::int64_t height = 1; !level.empty(); ++height) {
        if (height > kMaxRootHeight) {
            throw InvalidArgument("positive_roots: height bound exceeded; Cartan matrix not of finite type");
        }
        std::vector<RootVector> next;
        for (const auto& beta : level) {
            for (int i = 0; i < r; ++i) {
                // p = largest k with beta - k alpha_i a root (alpha_i-string through beta).
                std::int64_t p = 0;
                RootVector down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!seen.contains(down)) break;
                    ++p;
                }
                std::int64_t pairing = 0;
                for (int j = 0; j < r; ++j) pairing += beta[j] * datum.cartan(i, j);
                if (p - pairing > 0) {
                    RootVector up = beta;
                    up[i] += 1;
                    if (seen.insert(up).second) next.push_back(up);
                }
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    std::sort(all.begin(), all.end(), root_order);
    return all;
}

RootVector highest_root(const CartanDatum& datum) {
    const auto roots = positive_roots(datum);
    const auto& top = roots.back();
    if (roots.size() > 1 && roots[roots.size() - 2].height() == top.height()) {
        throw ConsistencyError("highest root is not unique");
    }
    return top;
}

int coxeter_number(const CartanDatum& datum) {
    return static_cast<int>(highest_root(datum).height()) + 1;
}

std::vector<WeightVector> weyl_orbit(const CartanDatum& datum, const WeightVector& w) {
    if (w.rank() != datum.rank()) throw InvalidArgument("weyl_orbit: rank mismatch");
    std::set<WeightVector> seen{w};
    std::vector<WeightVector> orbit{w};
    for (std::size_t head = 0; head < orbit.size(); ++head) {
        for (int i = 0; i < datum.rank(); ++i) {
            if (orbit[head][i] == 0) continue;
            auto next = datum.reflect(orbit[head], i);
            if (seen.insert(next).second) orbit.push_back(std::move(next));
        }
    }
    return orbit;
}

WeightVector dominant_representative(const CartanDatum& datum, WeightVector w) {
    if (w.rank() != datum.rank()) throw InvalidArgument("dominant_representative: rank mismatch");
    while (true) {
        int i = 0;
        while (i < datum.rank() && w[i] >= 0) ++i;
        if (i == datum.rank()) return w;
        datum.reflect_in_place(w, i);
    }
}

WeightVector weyl_vector(const CartanDatum& datum) {
    const auto rho = WeightVector::ones(datum.rank());
    RootVector sum(datum.rank());
    for (const auto& a : positive_roots(datum)) sum += a;
    const auto labels = datum.to_weight(sum);
    for (int i = 0; i < datum.rank(); ++i) {
        if (labels[i] != 2) {
            throw ConsistencyError("weyl_vector: sum of positive roots is not 2 rho");
        }
    }
    return rho;
}

WeightVector dual_weight(const CartanDatum& datum, const WeightVector& w) {
    return dominant_representative(datum, -w);
}

// ---------------------------------------------------------------------------
// Built-in algebras

namespace {

IntMatrix identity_cartan(int n) {
    IntMatrix a(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    return a;
}

void link(IntMatrix& a, int i, int j, std::int64_t aij, std::int64_t aji) {
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = aij;
    a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = aji;
}

std::vector<Rational> uniform_norms(int n, long value) {
    return std::vector<Rational>(static_cast<std::size_t>(n), Rational(value));
}

}  // namespace

CartanDatum builtin_algebra(std::string_view name) {
    std::string upper;
    for (char c : name) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (upper.size() < 2 || !std::isdigit(static_cast<unsigned char>(upper[1]))) {
        throw InvalidArgument("unknown algebra '" + std::string(name) + "'");
    }
    const char type = upper[0];
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(upper.substr(1), &used);
        if (used != upper.size() - 1) throw InvalidArgument("");
    } catch (...) {
        throw InvalidArgument("unknown algebra '" + std::string(name) + "'");
    }
    auto unknown = [&] { return InvalidArgument("unknown algebra '" + std::string(name) + "'"); };

    IntMatrix a;
    std::vector<Rational> d;
    switch (type) {
        case 'A':
            if (n < 1 || n > kMaxRank) throw unknown();
            a = identity_cartan(n);
            for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1, -1, -1);
            d = uniform_norms(n, 1);
            break;
        case 'B':
            // a_1 .. a_{n-1} long, a_n short.
            if (n < 2 || n > kMaxRank) throw unknown();
            a = identity_cartan(n);
            for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1, -1, -1);
            link(a, n - 2, n - 1, -1, -2);
            d = uniform_norms(n, 2);
            d.back() = 1;
            break;
        case 'C':
            // a_1 .. a_{n-1} short, a_n long.
            if (n < 2 || n > kMaxRank) throw unknown();
            a = identity_cartan(n);
            for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1, -1, -1);
            link(a, n - 2, n - 1, -2, -1);
            d = uniform_norms(n, 1);
            d.back() = 2;
            break;
        case 'D':
            if (n < 4 || n > kMaxRank) throw unknown();
            a = identity_cartan(n);
            for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1, -1, -1);
            link(a, n - 3, n - 1, -1, -1);
            d = uniform_norms(n, 1);
            break;
        case 'G':
            // a_1 short (norm^2 2), a_2 long (norm^2 6).
            if (n != 2) throw unknown();
            a = identity_cartan(2);
            link(a, 0, 1, -3, -1);
            d = {Rational(1), Rational(3)};
            break;
        case 'F':
            // a_1, a_2 long; a_3, a_4 short; (a1,a2) = (a2,a3) = -2, (a3,a4) = -1.
            if (n != 4) throw unknown();
            a = identity_cartan(4);
            link(a, 0, 1, -1, -1);
            link(a, 1, 2, -1, -2);
            link(a, 2, 3, -1, -1);
            d = {Rational(2), Rational(2), Rational(1), Rational(1)};
            break;
        case 'E':
            // Bourbaki numbering: 1-3-4-5-6 chain, 2 attached to 4.
            if (n != 6) throw unknown();
            a = identity_cartan(6);
            link(a, 0, 2, -1, -1);
            link(a, 2, 3, -1, -1);
            link(a, 3, 4, -1, -1);
            link(a, 4, 5, -1, -1);
            link(a, 1, 3, -1, -1);
            d = uniform_norms(6, 1);
            break;
        default:
            throw unknown();
    }
    return CartanDatum(std::move(a), std::move(d), std::string(1, type) + std::to_string(n));
}

std::vector<std::string> builtin_algebra_names() {
    std::vector<std::string> names;
    for (int n = 1; n <= kMaxRank; ++n) names.push_back("A" + std::to_string(n));
    for (int n = 2; n <= kMaxRank; ++n) names.push_back("B" + std::to_string(n));
    for (int n = 2; n <= kMaxRank; ++n) names.push_back("C" + std::to_string(n));
    for (int n = 4; n <= kMaxRank; ++n) names.push_back("D" + std::to_string(n));
    names.insert(names.end(), {"G2", "F4", "E6"});
    return names;
}

CartanDatum parse_cartan_json(std::string_view text, std::string name) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("cartan json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("cartan") || !j["cartan"].is_array()) {
        throw InvalidArgument("cartan json: expected {\"cartan\": [[...]], \"norms\": [...]}");
    }
    IntMatrix a;
    for (const auto& row : j["cartan"]) {
        if (!row.is_array()) throw InvalidArgument("cartan json: rows must be arrays");
        std::vector<std::int64_t> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw InvalidArgument("cartan json: entries must be integers");
            r.push_back(x.get<std::int64_t>());
        }
        a.push_back(std::move(r));
    }
    if (!j.contains("norms") || j["norms"].is_null()) {
        return CartanDatum::from_cartan(std::move(a), std::move(name));
    }
    std::vector<Rational> d;
    for (const auto& x : j["norms"]) d.push_back(parse_rational(x));
    return CartanDatum(std::move(a), std::move(d), std::move(name));
}

CartanDatum load_cartan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open Cartan file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_cartan_json(buf.str(), path);
}

CartanDatum resolve_algebra(const std::string& name_or_path) {
    const auto names = builtin_algebra_names();
    std::string upper;
    for (char c : name_or_path) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (std::find(names.begin(), names.end(), upper) != names.end()) return builtin_algebra(upper);
    std::ifstream probe(name_or_path);
    if (probe) return load_cartan_file(name_or_path);
    throw InvalidArgument("unknown algebra '" + name_or_path + "' (not a built-in name or readable file)");
}

}  // namespace weylchar
