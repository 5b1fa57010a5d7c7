#include "weylchar/characters.hpp"

#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "weylchar/error.hpp"
#include "weylchar/serialize.hpp"

namespace weylchar {

namespace {

void require_dominant(const CartanDatum& datum, const WeightVector& highest, const char* op) {
    if (highest.rank() != datum.rank()) {
        throw InvalidArgument(std::string(op) + ": weight has " + std::to_string(highest.rank()) +
                              " labels, algebra has rank " + std::to_string(datum.rank()));
    }
    if (!highest.is_dominant()) {
        throw InvalidArgument(std::string(op) + ": weight " + highest.to_string() + " is not dominant");
    }
}

CharacterResult finish_character(const CartanDatum& datum, const WeightVector& highest,
                                 const LaurentPolynomial& numerator, const LaurentPolynomial& denominator) {
    CharacterResult result;
    result.highest_weight = highest;
    result.polynomial = exact_div(numerator, denominator);
    const auto dual = dual_weight(datum, highest);
    for (const auto& [e, c] : result.polynomial.term_map()) {
        if (c <= 0) {
            throw ConsistencyError("character: non-positive coefficient " + c.get_str() + " in " +
                                   highest.to_string());
        }
        auto mu = datum.to_weight(RootVector(e.to_vector(datum.rank()))) - dual;
        if (mu.is_dominant()) result.multiplicities.emplace(std::move(mu), c);
    }
    result.dimension = evaluate_at_one(result.polynomial);
    const Integer closed = weyl_dimension(datum, highest);
    if (result.dimension != closed) {
        throw ConsistencyError("character " + highest.to_string() + ": coefficient sum " +
                               result.dimension.get_str() + " differs from Weyl dimension " + closed.get_str());
    }
    return result;
}

std::string sanitize(const std::string& name) {
    std::string out;
    for (const char c : name) {
        const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                          c == '-' || c == '_';
        out.push_back(keep ? c : '_');
    }
    return out.empty() ? "cartan" : out;
}

std::optional<Json> read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        return Json::parse(in);
    } catch (const Json::exception&) {
        return std::nullopt;
    }
}

// Write-then-rename so concurrent readers never see a partial file.
void write_json(const std::filesystem::path& path, const Json& j) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) return;
    std::ostringstream suffix;
    suffix << ".tmp" << std::hash<std::thread::id>{}(std::this_thread::get_id());
    auto tmp = path;
    tmp += suffix.str();
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump();
        if (!out) return;
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

LaurentPolynomial a_polynomial(const CartanDatum& datum, const GammaSystem& system, const WeightVector& highest) {
    require_dominant(datum, highest, "a_polynomial");
    const auto ex = exponents(datum, system, highest);
    LaurentPolynomial p(datum.rank());
    for (std::size_t a = 0; a < ex.size(); ++a) p.add_term(ex[a], system.signatures[a]);
    if (p.size() != ex.size()) throw ConsistencyError("a_polynomial: two tuples produced the same monomial");
    return p;
}

CharacterResult character(const CartanDatum& datum, const GammaSystem& system, const WeightVector& highest) {
    require_dominant(datum, highest, "character");
    return finish_character(datum, highest, a_polynomial(datum, system, highest),
                            a_polynomial(datum, system, WeightVector(datum.rank())));
}

Integer weyl_dimension(const CartanDatum& datum, const WeightVector& highest) {
    require_dominant(datum, highest, "weyl_dimension");
    const auto rho = WeightVector::ones(datum.rank());
    const auto shifted = rho + highest;
    Rational d = 1;
    for (const auto& alpha : positive_roots(datum)) {
        d *= bilinear(datum, shifted, alpha) / bilinear(datum, rho, alpha);
    }
    if (d.get_den() != 1) throw ConsistencyError("weyl_dimension: non-integral result " + d.get_str());
    return d.get_num();
}

Integer dimension(const CartanDatum& datum, const WeightVector& highest) {
    require_dominant(datum, highest, "dimension");
    return character(datum, build_gamma_system(datum), highest).dimension;
}

Integer multiplicity(const CharacterResult& result, const CartanDatum& datum, const WeightVector& mu) {
    if (mu.rank() != datum.rank()) throw InvalidArgument("multiplicity: rank mismatch");
    const auto it = result.multiplicities.find(dominant_representative(datum, mu));
    return it == result.multiplicities.end() ? Integer(0) : it->second;
}

Exponent exponent_of_weight(const CartanDatum& datum, const WeightVector& highest, const WeightVector& mu) {
    const auto root = datum.to_root(mu + dual_weight(datum, highest));
    return Exponent::from(root.coords());
}

WeightVector weight_of_exponent(const CartanDatum& datum, const WeightVector& highest, const Exponent& e) {
    return datum.to_weight(RootVector(e.to_vector(datum.rank()))) - dual_weight(datum, highest);
}

Algebra::Algebra(CartanDatum datum, AlgebraOptions options)
    : datum_(std::move(datum)), options_(std::move(options)), roots_(positive_roots(datum_)) {
    std::optional<std::filesystem::path> path;
    if (options_.cache_dir) path = *options_.cache_dir / (cache_key() + ".gamma.json");
    if (path) {
        if (const auto j = read_json(*path)) {
            try {
                auto system = gamma_system_from_json(*j);
                validate(datum_, system);
                system_ = std::move(system);
                loaded_from_cache_ = true;
            } catch (const std::exception&) {
                loaded_from_cache_ = false;
            }
        }
    }
    if (!loaded_from_cache_) {
        system_ = build_gamma_system(datum_, options_.order);
        if (path) write_json(*path, to_json(system_));
    }
    denominator_ = weylchar::a_polynomial(datum_, system_, WeightVector(datum_.rank()));
}

std::string Algebra::cache_key() const {
    std::string key = sanitize(datum_.name()) + "-" + datum_.fingerprint();
    if (options_.order == TableOrder::Lexicographic) key += "-lex";
    return key;
}

LaurentPolynomial Algebra::a_polynomial(const WeightVector& highest) const {
    return weylchar::a_polynomial(datum_, system_, highest);
}

std::optional<std::filesystem::path> Algebra::character_path(const WeightVector& highest) const {
    if (!options_.cache_dir) return std::nullopt;
    std::string labels;
    for (const auto s : highest.labels()) {
        if (!labels.empty()) labels += "_";
        labels += std::to_string(s);
    }
    return *options_.cache_dir / (cache_key() + ".char." + labels + ".json");
}

CharacterResult Algebra::compute_character(const WeightVector& highest) const {
    const auto path = character_path(highest);
    if (path) {
        if (const auto j = read_json(*path)) {
            try {
                auto result = character_from_json(*j);
                if (result.highest_weight == highest && result.polynomial.nvars() == rank() &&
                    evaluate_at_one(result.polynomial) == result.dimension &&
                    result.dimension == weyl_dimension(datum_, highest)) {
                    return result;
                }
            } catch (const std::exception&) {
            }
        }
    }
    auto result = finish_character(datum_, highest, a_polynomial(highest), denominator_);
    if (path) write_json(*path, to_json(result));
    return result;
}

std::shared_ptr<const CharacterResult> Algebra::character(const WeightVector& highest) const {
    require_dominant(datum_, highest, "character");
    {
        std::shared_lock lock(mutex_);
        const auto it = cache_.find(highest);
        if (it != cache_.end()) return it->second;
    }
    auto computed = std::make_shared<const CharacterResult>(compute_character(highest));
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(highest, std::move(computed)).first->second;
}

Integer Algebra::dimension(const WeightVector& highest) const {
    return character(highest)->dimension;
}

Integer Algebra::multiplicity(const WeightVector& highest, const WeightVector& mu) const {
    return weylchar::multiplicity(*character(highest), datum_, mu);
}

}  // namespace weylchar
