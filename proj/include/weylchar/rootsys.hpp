#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace weylchar {

using Integer = mpz_class;
using Rational = mpq_class;

/// Largest rank the engine accepts. Exponent vectors are stored inline up to this size.
inline constexpr int kMaxRank = 8;

/// Integer vector in the simple-root basis: sum_i coords[i] * alpha_i.
class RootVector {
public:
    RootVector() = default;
    explicit RootVector(int rank) : coords_(static_cast<std::size_t>(rank), 0) {}
    explicit RootVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
    RootVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

    static RootVector simple(int rank, int i);

    int rank() const { return static_cast<int>(coords_.size()); }
    std::int64_t operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    std::int64_t& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int64_t>& coords() const { return coords_; }

    std::int64_t height() const;
    bool is_zero() const;
    /// All coordinates >= 0, i.e. membership in the positive root lattice.
    bool is_nonnegative() const;

    RootVector& operator+=(const RootVector& other);
    RootVector& operator-=(const RootVector& other);
    friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
    friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
    friend RootVector operator*(std::int64_t k, RootVector a);

    friend bool operator==(const RootVector&, const RootVector&) = default;
    friend auto operator<=>(const RootVector&, const RootVector&) = default;

    std::string to_string() const;

private:
    std::vector<std::int64_t> coords_;
};

/// Integral weight in the fundamental-weight basis (Dynkin labels).
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(int rank) : labels_(static_cast<std::size_t>(rank), 0) {}
    explicit WeightVector(std::vector<std::int64_t> labels) : labels_(std::move(labels)) {}
    WeightVector(std::initializer_list<std::int64_t> labels) : labels_(labels) {}

    static WeightVector fundamental(int rank, int i);
    /// The all-ones weight, rho.
    static WeightVector ones(int rank);

    int rank() const { return static_cast<int>(labels_.size()); }
    std::int64_t operator[](int i) const { return labels_[static_cast<std::size_t>(i)]; }
    std::int64_t& operator[](int i) { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int64_t>& labels() const { return labels_; }

    bool is_zero() const;
    bool is_dominant() const;

    WeightVector& operator+=(const WeightVector& other);
    WeightVector& operator-=(const WeightVector& other);
    friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
    friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
    friend WeightVector operator-(WeightVector a);

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
    friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

    std::string to_string() const;

private:
    std::vector<std::int64_t> labels_;
};

inline std::ostream& operator<<(std::ostream& os, const RootVector& v) { return os << v.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const WeightVector& w) { return os << w.to_string(); }

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Cartan matrix together with the root-length normalization d_i = (alpha_i, alpha_i) / 2.
///
/// Convention: cartan(i, j) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i), so the symmetric
/// Gram matrix of the simple roots is B(i, j) = d_i * cartan(i, j). Construction validates
/// finite type (B positive definite); all accessors are exact.
class CartanDatum {
public:
    CartanDatum(IntMatrix cartan, std::vector<Rational> norms, std::string name = {});

    /// Derives the smallest integral symmetrizer (min d_i = 1) from the matrix alone.
    static CartanDatum from_cartan(IntMatrix cartan, std::string name = {});

    int rank() const { return rank_; }
    const std::string& name() const { return name_; }
    std::int64_t cartan(int i, int j) const { return cartan_[idx(i)][idx(j)]; }
    const IntMatrix& cartan_matrix() const { return cartan_; }
    const Rational& norm(int i) const { return norms_[idx(i)]; }
    const std::vector<Rational>& norms() const { return norms_; }

    /// (alpha_i, alpha_j).
    const Rational& root_form(int i, int j) const { return root_gram_[idx(i)][idx(j)]; }
    /// (lambda_i, lambda_j), from the inverse Cartan matrix.
    const Rational& weight_form(int i, int j) const { return weight_gram_[idx(i)][idx(j)]; }

    /// Root-basis coordinates of a weight (rational in general).
    std::vector<Rational> root_coords(const WeightVector& w) const;
    /// Dynkin labels of a root-lattice vector.
    WeightVector to_weight(const RootVector& v) const;
    /// Inverse of to_weight when the result is integral; throws otherwise.
    RootVector to_root(const WeightVector& w) const;
    /// Simple reflection s_i acting on Dynkin labels.
    WeightVector reflect(const WeightVector& w, int i) const;
    /// In-place variant of reflect.
    void reflect_in_place(WeightVector& w, int i) const;

    /// Stable text form of the Cartan matrix and norms; used to key caches.
    std::string canonical_string() const;
    /// Hex FNV-1a digest of canonical_string().
    std::string fingerprint() const;

private:
    static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

    int rank_ = 0;
    std::string name_;
    IntMatrix cartan_;
    std::vector<Rational> norms_;
    std::vector<std::vector<Rational>> root_gram_;
    std::vector<std::vector<Rational>> weight_gram_;
    std::vector<std::vector<Rational>> cartan_inverse_;
};

Rational bilinear(const CartanDatum& datum, const RootVector& x, const RootVector& y);
Rational bilinear(const CartanDatum& datum, const WeightVector& x, const RootVector& y);
Rational bilinear(const CartanDatum& datum, const RootVector& x, const WeightVector& y);
Rational bilinear(const CartanDatum& datum, const WeightVector& x, const WeightVector& y);

/// Positive roots ordered by height, then lexicographically descending on coordinates.
std::vector<RootVector> positive_roots(const CartanDatum& datum);

RootVector highest_root(const CartanDatum& datum);
int coxeter_number(const CartanDatum& datum);

/// Weyl orbit of w by breadth-first closure under simple reflections (BFS order from w).
std::vector<WeightVector> weyl_orbit(const CartanDatum& datum, const WeightVector& w);

/// The unique dominant element of the orbit of w.
WeightVector dominant_representative(const CartanDatum& datum, WeightVector w);

/// rho = (1, ..., 1); checks 2 rho = sum of positive roots.
WeightVector weyl_vector(const CartanDatum& datum);

/// -w0(w): the dominant weight whose negative lies in the orbit of w.
WeightVector dual_weight(const CartanDatum& datum, const WeightVector& w);

/// Built-in simple algebras: "A1".."A8", "B2".."B8", "C2".."C8", "D4".."D8", "G2", "F4", "E6".
/// Non-simply-laced types use long^2 = 4, short^2 = 2 (G2: 6 and 2), matching F4 below:
/// (a1,a1) = (a2,a2) = 4, (a3,a3) = (a4,a4) = 2.
CartanDatum builtin_algebra(std::string_view name);
std::vector<std::string> builtin_algebra_names();

/// Parses {"cartan": [[...]], "norms": [...]} (norms optional; entries numbers or "p/q").
CartanDatum parse_cartan_json(std::string_view text, std::string name = {});
CartanDatum load_cartan_file(const std::string& path);

/// Name lookup first, then a JSON file path.
CartanDatum resolve_algebra(const std::string& name_or_path);

}  // namespace weylchar
