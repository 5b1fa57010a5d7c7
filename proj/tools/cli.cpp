#include "cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "weylchar/error.hpp"
#include "weylchar/serialize.hpp"
#include "weylchar/tensor.hpp"
#include "weylchar/verify.hpp"

namespace weylchar::cli {

namespace {

struct Options {
    std::string format = "text";
    std::string cache_dir;
    bool no_cache = false;
    std::string algebra;
    std::vector<std::string> weight_tokens;
    std::string first;
    std::string second;
    std::string spec;
    std::string match_paper;
};

WeightVector parse_weight(const std::vector<std::string>& tokens, int rank) {
    std::vector<std::int64_t> labels;
    for (const auto& token : tokens) {
        std::stringstream ss(token);
        for (std::string item; std::getline(ss, item, ',');) {
            if (item.empty()) continue;
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(item, &used);
            } catch (const std::exception&) {
                throw InvalidArgument("weight label '" + item + "' is not an integer");
            }
            if (used != item.size()) throw InvalidArgument("weight label '" + item + "' is not an integer");
            if (v < 0) throw InvalidArgument("weight labels must be non-negative");
            labels.push_back(v);
        }
    }
    if (static_cast<int>(labels.size()) != rank) {
        throw InvalidArgument("expected " + std::to_string(rank) + " weight labels, got " +
                              std::to_string(labels.size()));
    }
    return WeightVector(std::move(labels));
}

AlgebraOptions algebra_options(const Options& opt, TableOrder order = TableOrder::Height) {
    AlgebraOptions out;
    out.order = order;
    if (opt.no_cache) return out;
    if (!opt.cache_dir.empty()) {
        out.cache_dir = opt.cache_dir;
    } else if (const char* env = std::getenv("WEYLCHAR_CACHE"); env != nullptr && *env != '\0') {
        out.cache_dir = env;
    } else {
        out.cache_dir = ".weylchar-cache";
    }
    return out;
}

std::vector<std::string> default_names(int rank) {
    std::vector<std::string> names;
    for (int i = 0; i < rank; ++i) names.push_back("u" + std::to_string(i + 1));
    return names;
}

int do_character(const Options& opt, std::ostream& out) {
    const Algebra algebra(resolve_algebra(opt.algebra), algebra_options(opt));
    const auto hw = parse_weight(opt.weight_tokens, algebra.rank());
    const auto ch = algebra.character(hw);
    std::optional<std::pair<std::vector<Exponent>, std::vector<std::string>>> merge;
    if (!opt.spec.empty()) merge = parse_merge_spec(opt.spec, algebra.rank());
    LaurentPolynomial shown = ch->polynomial;
    std::vector<std::string> names = default_names(algebra.rank());
    if (merge) {
        shown = specialize(ch->polynomial, merge->first, static_cast<int>(merge->second.size()));
        names = merge->second;
    }

    if (opt.format == "json") {
        auto j = to_json(*ch);
        if (merge) j["specialized"] = {{"names", names}, {"poly", to_json(shown)}};
        out << j.dump() << "\n";
        return kExitOk;
    }
    out << "algebra " << algebra.datum().name() << ", highest weight " << hw.to_string() << "\n";
    out << "dimension " << ch->dimension.get_str() << "\n";
    out << "character";
    if (merge) out << " (specialized " << opt.spec << ")";
    out << ":\n" << shown.to_string(names) << "\n";
    out << "dominant weight multiplicities:\n";
    for (auto it = ch->multiplicities.rbegin(); it != ch->multiplicities.rend(); ++it) {
        out << "  " << std::left << std::setw(20) << it->first.to_string() << " " << it->second.get_str() << "\n";
    }
    return kExitOk;
}

int do_dimension(const Options& opt, std::ostream& out) {
    const Algebra algebra(resolve_algebra(opt.algebra), algebra_options(opt));
    const auto hw = parse_weight(opt.weight_tokens, algebra.rank());
    const auto dim = algebra.dimension(hw);
    if (opt.format == "json") {
        out << Json{{"hw", hw.labels()}, {"dim", integer_to_json(dim)}}.dump() << "\n";
    } else {
        out << dim.get_str() << "\n";
    }
    return kExitOk;
}

int do_tensor(const Options& opt, std::ostream& out) {
    const Algebra algebra(resolve_algebra(opt.algebra), algebra_options(opt));
    const auto a = parse_weight({opt.first}, algebra.rank());
    const auto b = parse_weight({opt.second}, algebra.rank());
    const auto d = tensor_decompose(algebra, a, b);
    if (opt.format == "json") {
        out << to_json(d).dump() << "\n";
        return kExitOk;
    }
    out << "V(" << a.to_string() << ") x V(" << b.to_string() << ") = " << algebra.dimension(a).get_str() << " x "
        << algebra.dimension(b).get_str() << " = " << d.dim_check.get_str() << "\n";
    for (const auto& [w, m] : d.constituents) {
        out << "  " << std::right << std::setw(3) << m.get_str() << " V(" << w.to_string() << ")  dim "
            << algebra.dimension(w).get_str() << "\n";
    }
    out << d.constituents.size() << " constituents\n";
    return kExitOk;
}

int do_tables(const Options& opt, std::ostream& out, std::ostream& err) {
    auto order = TableOrder::Height;
    const auto datum = resolve_algebra(opt.algebra);
    if (!opt.match_paper.empty()) {
        if (opt.match_paper != "f4" && opt.match_paper != "F4") {
            err << "error: --match-paper only supports f4\n";
            return kExitUsage;
        }
        if (datum.canonical_string() != builtin_algebra("F4").canonical_string()) {
            err << "error: --match-paper f4 requires the F4 algebra\n";
            return kExitUsage;
        }
        order = TableOrder::Lexicographic;
    }
    const Algebra algebra(datum, algebra_options(opt, order));
    const auto& s = algebra.system();
    if (opt.format == "json") {
        out << to_json(s).dump() << "\n";
        return kExitOk;
    }
    if (order == TableOrder::Height) {
        out << "# canonical order: 0 first, then ascending height, ties lexicographic;"
               " row numbers may differ from published tables\n";
    } else {
        out << "# lexicographic order: row numbering follows the published F4 tables\n";
    }
    for (int i = 0; i < s.tables.rank(); ++i) {
        out << "table " << i + 1 << " (" << s.tables.size(i) << " rows)\n";
        for (std::size_t k = 0; k < s.tables.size(i); ++k) {
            out << "  " << std::right << std::setw(4) << k + 1 << "  " << s.tables.at(i, k).to_string() << "\n";
        }
    }
    out << "tuples (" << s.order() << ")\n";
    for (std::size_t a = 0; a < s.order(); ++a) {
        out << "  " << std::right << std::setw(6) << a + 1 << "  {";
        for (std::size_t i = 0; i < s.tuples[a].size(); ++i) out << (i ? "," : "") << s.tuples[a][i] + 1;
        out << "}  " << (s.signatures[a] > 0 ? "+1" : "-1") << "\n";
    }
    out << "rows per table:";
    for (int i = 0; i < s.tables.rank(); ++i) out << " " << s.tables.size(i);
    out << "; tuples: " << s.order() << "\n";
    return kExitOk;
}

int do_verify(const Options& opt, std::ostream& out) {
    const auto datum = resolve_algebra(opt.algebra);
    const Algebra algebra(datum, algebra_options(opt));
    const bool f4 = datum.canonical_string() == builtin_algebra("F4").canonical_string();
    const auto results = f4 ? verify::run_f4(algebra) : verify::run_generic(algebra);
    bool ok = true;
    if (opt.format == "json") {
        Json j = Json::array();
        for (const auto& r : results) j.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        out << j.dump() << "\n";
    }
    for (std::size_t k = 0; k < results.size(); ++k) {
        const auto& r = results[k];
        ok = ok && r.passed;
        if (opt.format != "json") {
            out << (r.passed ? "PASS" : "FAIL") << "  [" << k + 1 << "] " << r.name << ": " << r.detail << "\n";
        }
    }
    if (opt.format != "json") {
        out << (ok ? "all checks passed" : "verification FAILED") << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact characters, dimensions and tensor products of simple Lie algebras", "weylchar"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cache-dir", opt.cache_dir, "Cache directory (default $WEYLCHAR_CACHE or .weylchar-cache)");
    app.add_flag("--no-cache", opt.no_cache, "Disable the on-disk cache");

    const std::string algebra_help = "Built-in name (A1..A8, B2..B8, C2..C8, D4..D8, G2, F4, E6) or Cartan JSON file";

    auto* character = app.add_subcommand("character", "Character of an irreducible module");
    character->add_option("algebra", opt.algebra, algebra_help)->required();
    character->add_option("weight", opt.weight_tokens, "Dynkin labels, space or comma separated")->required();
    character->add_option("--spec", opt.spec, "Variable merge, e.g. x,x,y,y");

    auto* dimension = app.add_subcommand("dimension", "Dimension of an irreducible module");
    dimension->add_option("algebra", opt.algebra, algebra_help)->required();
    dimension->add_option("weight", opt.weight_tokens, "Dynkin labels")->required();

    auto* tensor = app.add_subcommand("tensor", "Decompose a tensor product of two irreducibles");
    tensor->add_option("algebra", opt.algebra, algebra_help)->required();
    tensor->add_option("first", opt.first, "Dynkin labels, comma separated")->required();
    tensor->add_option("second", opt.second, "Dynkin labels, comma separated")->required();

    auto* tables = app.add_subcommand("tables", "Print special-root tables, tuples and signatures");
    tables->add_option("algebra", opt.algebra, algebra_help)->required();
    tables->add_option("--match-paper", opt.match_paper, "Use the published F4 row order (value: f4)");

    auto* verify = app.add_subcommand("verify", "Run golden and oracle checks");
    verify->add_option("algebra", opt.algebra, algebra_help)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*character) return do_character(opt, out);
        if (*dimension) return do_dimension(opt, out);
        if (*tensor) return do_tensor(opt, out);
        if (*tables) return do_tables(opt, out, err);
        if (*verify) return do_verify(opt, out);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}

}  // namespace weylchar::cli
