#include "weylchar/serialize.hpp"

#include <limits>

#include "weylchar/error.hpp"

namespace weylchar {

namespace {

std::vector<std::int64_t> int_list(const Json& j, const char* what) {
    if (!j.is_array()) throw InvalidArgument(std::string("json: ") + what + " must be an array");
    std::vector<std::int64_t> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InvalidArgument(std::string("json: ") + what + " must hold integers");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("json: missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Json integer_to_json(const Integer& n) {
    if (n.fits_slong_p()) return Json(static_cast<std::int64_t>(n.get_si()));
    return Json(n.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        Integer n;
        if (n.set_str(j.get<std::string>(), 10) != 0) throw InvalidArgument("json: malformed integer string");
        return n;
    }
    throw InvalidArgument("json: expected an integer");
}

Json to_json(const LaurentPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"e", e.to_vector(p.nvars())}, {"c", c.get_str()}});
    }
    return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

LaurentPolynomial laurent_from_json(const Json& j) {
    const auto nvars = field(j, "nvars").get<int>();
    if (nvars < 0 || nvars > kMaxRank) throw InvalidArgument("json: nvars out of range");
    LaurentPolynomial p(nvars);
    for (const auto& t : field(j, "terms")) {
        const auto e = int_list(field(t, "e"), "exponent");
        if (static_cast<int>(e.size()) != nvars) throw InvalidArgument("json: exponent length != nvars");
        const auto c = integer_from_json(field(t, "c"));
        if (c == 0) throw InvalidArgument("json: zero coefficient");
        if (p.coefficient(Exponent::from(e)) != 0) throw InvalidArgument("json: repeated exponent");
        p.add_term(Exponent::from(e), c);
    }
    return p;
}

Json to_json(const GammaSystem& system) {
    Json tables = Json::array();
    for (const auto& table : system.tables.entries) {
        Json rows = Json::array();
        for (const auto& g : table) rows.push_back(g.coords());
        tables.push_back(std::move(rows));
    }
    Json tuples = Json::array();
    for (const auto& t : system.tuples) {
        Json row = Json::array();
        for (const auto i : t) row.push_back(i + 1);
        tuples.push_back(std::move(row));
    }
    return {{"tables", std::move(tables)}, {"tuples", std::move(tuples)}, {"signatures", system.signatures}};
}

GammaSystem gamma_system_from_json(const Json& j) {
    GammaSystem system;
    for (const auto& table : field(j, "tables")) {
        std::vector<RootVector> rows;
        for (const auto& g : table) rows.emplace_back(int_list(g, "table row"));
        system.tables.entries.push_back(std::move(rows));
    }
    for (const auto& t : field(j, "tuples")) {
        GammaTuple tuple;
        for (const auto i : int_list(t, "tuple")) {
            if (i < 1 || i > std::numeric_limits<std::uint32_t>::max()) {
                throw InvalidArgument("json: tuple index out of range");
            }
            tuple.push_back(static_cast<std::uint32_t>(i - 1));
        }
        system.tuples.push_back(std::move(tuple));
    }
    for (const auto s : int_list(field(j, "signatures"), "signatures")) system.signatures.push_back(static_cast<int>(s));
    if (system.signatures.size() != system.tuples.size()) {
        throw InvalidArgument("json: signatures and tuples differ in length");
    }
    for (const auto& tuple : system.tuples) {
        if (static_cast<int>(tuple.size()) != system.tables.rank()) throw InvalidArgument("json: tuple length != rank");
        for (int i = 0; i < system.tables.rank(); ++i) {
            if (tuple[static_cast<std::size_t>(i)] >= system.tables.size(i)) {
                throw InvalidArgument("json: tuple index out of range");
            }
        }
    }
    return system;
}

Json to_json(const CharacterResult& result) {
    Json mults = Json::array();
    for (const auto& [w, m] : result.multiplicities) mults.push_back({{"w", w.labels()}, {"m", integer_to_json(m)}});
    return {{"hw", result.highest_weight.labels()},
            {"dim", integer_to_json(result.dimension)},
            {"mults", std::move(mults)},
            {"poly", to_json(result.polynomial)}};
}

CharacterResult character_from_json(const Json& j) {
    CharacterResult result;
    result.highest_weight = WeightVector(int_list(field(j, "hw"), "hw"));
    result.dimension = integer_from_json(field(j, "dim"));
    for (const auto& m : field(j, "mults")) {
        result.multiplicities.emplace(WeightVector(int_list(field(m, "w"), "w")), integer_from_json(field(m, "m")));
    }
    result.polynomial = laurent_from_json(field(j, "poly"));
    return result;
}

Json to_json(const Decomposition& d) {
    Json rhs = Json::array();
    for (const auto& [w, m] : d.constituents) rhs.push_back({{"w", w.labels()}, {"mult", integer_to_json(m)}});
    return {{"lhs", Json::array({d.factors.first.labels(), d.factors.second.labels()})},
            {"rhs", std::move(rhs)},
            {"dim_check", integer_to_json(d.dim_check)}};
}

Decomposition decomposition_from_json(const Json& j) {
    Decomposition d;
    const auto& lhs = field(j, "lhs");
    if (!lhs.is_array() || lhs.size() != 2) throw InvalidArgument("json: lhs must hold two weights");
    d.factors = {WeightVector(int_list(lhs[0], "lhs")), WeightVector(int_list(lhs[1], "lhs"))};
    for (const auto& c : field(j, "rhs")) {
        d.constituents.emplace_back(WeightVector(int_list(field(c, "w"), "w")), integer_from_json(field(c, "mult")));
    }
    d.dim_check = integer_from_json(field(j, "dim_check"));
    return d;
}

}  // namespace weylchar
