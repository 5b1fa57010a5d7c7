#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>

#include "weylchar/characters.hpp"
#include "weylchar/error.hpp"
#include "weylchar/tensor.hpp"
#include "weylchar/verify.hpp"
#include "weylchar/weyloracle.hpp"

namespace py = pybind11;
using namespace weylchar;

namespace {

py::int_ to_py(const Integer& n) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(n.get_str().c_str(), nullptr, 10));
}

py::tuple to_tuple(const std::vector<std::int64_t>& v) {
    py::tuple t(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) t[i] = v[i];
    return t;
}

WeightVector to_weight(const std::vector<std::int64_t>& labels) { return WeightVector(labels); }

py::dict poly_to_dict(const LaurentPolynomial& p) {
    py::dict d;
    for (const auto& [e, c] : p.terms()) d[to_tuple(e.to_vector(p.nvars()))] = to_py(c);
    return d;
}

class PyAlgebra {
public:
    PyAlgebra(const std::string& name, std::optional<std::string> cache_dir) {
        AlgebraOptions options;
        if (cache_dir) options.cache_dir = *cache_dir;
        algebra_ = std::make_shared<Algebra>(resolve_algebra(name), options);
    }

    std::string name() const { return algebra_->datum().name(); }
    int rank() const { return algebra_->rank(); }
    py::int_ weyl_order() const { return to_py(weyloracle::weyl_group_order(algebra_->datum())); }

    std::vector<py::tuple> positive_roots() const {
        std::vector<py::tuple> out;
        for (const auto& r : algebra_->roots()) out.push_back(to_tuple(r.coords()));
        return out;
    }

    std::vector<std::vector<py::tuple>> tables() const {
        std::vector<std::vector<py::tuple>> out;
        for (const auto& table : algebra_->system().tables.entries) {
            auto& rows = out.emplace_back();
            for (const auto& g : table) rows.push_back(to_tuple(g.coords()));
        }
        return out;
    }

    std::vector<py::tuple> tuples() const {
        std::vector<py::tuple> out;
        for (const auto& t : algebra_->system().tuples) {
            std::vector<std::int64_t> one_based(t.begin(), t.end());
            for (auto& i : one_based) ++i;
            out.push_back(to_tuple(one_based));
        }
        return out;
    }

    std::vector<int> signatures() const { return algebra_->system().signatures; }

    py::dict a_polynomial(const std::vector<std::int64_t>& hw) const {
        return poly_to_dict(algebra_->a_polynomial(to_weight(hw)));
    }

    py::dict character(const std::vector<std::int64_t>& hw, std::optional<std::string> spec) const {
        const auto ch = algebra_->character(to_weight(hw));
        py::dict out;
        out["hw"] = to_tuple(hw);
        out["dim"] = to_py(ch->dimension);
        py::dict mults;
        for (const auto& [w, m] : ch->multiplicities) mults[to_tuple(w.labels())] = to_py(m);
        out["mults"] = mults;
        out["poly"] = poly_to_dict(ch->polynomial);
        if (spec) {
            const auto [assignment, names] = parse_merge_spec(*spec, rank());
            const auto sp = specialize(ch->polynomial, assignment, static_cast<int>(names.size()));
            out["names"] = names;
            out["specialized"] = poly_to_dict(sp);
            out["text"] = sp.to_string(names);
        } else {
            out["text"] = ch->polynomial.to_string();
        }
        return out;
    }

    py::int_ dimension(const std::vector<std::int64_t>& hw) const { return to_py(algebra_->dimension(to_weight(hw))); }

    py::int_ multiplicity(const std::vector<std::int64_t>& hw, const std::vector<std::int64_t>& mu) const {
        return to_py(algebra_->multiplicity(to_weight(hw), to_weight(mu)));
    }

    std::vector<std::pair<py::tuple, py::int_>> tensor(const std::vector<std::int64_t>& a,
                                                       const std::vector<std::int64_t>& b) const {
        const auto d = tensor_decompose(*algebra_, to_weight(a), to_weight(b));
        std::vector<std::pair<py::tuple, py::int_>> out;
        for (const auto& [w, m] : d.constituents) out.emplace_back(to_tuple(w.labels()), to_py(m));
        return out;
    }

    std::vector<std::tuple<std::string, bool, std::string>> verify() const {
        const bool f4 = algebra_->datum().canonical_string() == builtin_algebra("F4").canonical_string();
        const auto results = f4 ? verify::run_f4(*algebra_) : verify::run_generic(*algebra_);
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& r : results) out.emplace_back(r.name, r.passed, r.detail);
        return out;
    }

private:
    std::shared_ptr<Algebra> algebra_;
};

}  // namespace

PYBIND11_MODULE(_weylchar, m) {
    m.doc() = "Exact characters of simple Lie algebras from special-root tables";

    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_ArithmeticError);

    m.def("builtin_algebras", &builtin_algebra_names);
    m.def(
        "weyl_dimension",
        [](const std::string& name, const std::vector<std::int64_t>& hw) {
            return to_py(weyl_dimension(resolve_algebra(name), to_weight(hw)));
        },
        py::arg("algebra"), py::arg("weight"));

    py::class_<PyAlgebra>(m, "Algebra")
        .def(py::init<const std::string&, std::optional<std::string>>(), py::arg("name"),
             py::arg("cache_dir") = py::none())
        .def_property_readonly("name", &PyAlgebra::name)
        .def_property_readonly("rank", &PyAlgebra::rank)
        .def_property_readonly("weyl_order", &PyAlgebra::weyl_order)
        .def("positive_roots", &PyAlgebra::positive_roots)
        .def("tables", &PyAlgebra::tables)
        .def("tuples", &PyAlgebra::tuples)
        .def("signatures", &PyAlgebra::signatures)
        .def("a_polynomial", &PyAlgebra::a_polynomial, py::arg("weight"))
        .def("character", &PyAlgebra::character, py::arg("weight"), py::arg("spec") = py::none())
        .def("dimension", &PyAlgebra::dimension, py::arg("weight"))
        .def("multiplicity", &PyAlgebra::multiplicity, py::arg("weight"), py::arg("mu"))
        .def("tensor", &PyAlgebra::tensor, py::arg("first"), py::arg("second"))
        .def("verify", &PyAlgebra::verify);
}
