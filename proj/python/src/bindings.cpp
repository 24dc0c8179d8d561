#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bandgrowth/cli.hpp"
#include "bandgrowth/lemma.hpp"
#include "bandgrowth/oracle.hpp"

namespace py = pybind11;
using namespace bandgrowth;

namespace {

// shared_ptr<const BaseAlgebra> does not sit well as a pybind holder; a thin
// value wrapper keeps the C++ API untouched
struct PyAlgebra {
    AlgebraPtr ptr;
    const BaseAlgebra& ref() const { return *ptr; }
};

using PyTriples = std::vector<std::tuple<std::string, std::int64_t, std::int64_t>>;

FieldSpec field_of(std::uint64_t p) { return p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p); }

std::vector<std::pair<std::uint32_t, Scalar>> scaled_terms(
    const FieldSpec& field,
    const std::vector<std::tuple<std::uint32_t, std::int64_t, std::int64_t>>& in) {
    std::vector<std::pair<std::uint32_t, Scalar>> out;
    for (const auto& [k, num, den] : in) out.emplace_back(k, Scalar::fraction(field, num, den));
    return out;
}

std::vector<std::tuple<std::string, bool, std::string>> report_rows(const VerificationReport& r) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& c : r.checks) out.emplace_back(c.name, c.pass, c.witness);
    return out;
}

GrowthResult<AlgebraElement> run_growth(const PyAlgebra& alg,
                                        const std::vector<AlgebraElement>& gens, int n_max,
                                        bool lie) {
    std::vector<WeightedGen<AlgebraElement>> wgens;
    for (const auto& g : gens) wgens.push_back({g, 1});
    const BaseAlgebra& a = alg.ref();
    if (!lie)
        return compute_growth<AlgebraElement>(
            GrowthTable::Kind::Assoc, wgens,
            [&a](const AlgebraElement& x, const AlgebraElement& y) { return a.mul(x, y); }, n_max);
    if (a.kind() == BaseAlgebra::Kind::StructureConstants) {
        validate_lie_structure(a);
        return compute_growth<AlgebraElement>(
            GrowthTable::Kind::Lie, wgens,
            [&a](const AlgebraElement& x, const AlgebraElement& y) { return a.mul(x, y); }, n_max);
    }
    return compute_growth<AlgebraElement>(
        GrowthTable::Kind::Lie, wgens,
        [&a](const AlgebraElement& x, const AlgebraElement& y) { return a.commutator(x, y); },
        n_max);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact growth functions of finitely generated algebras and the banded-matrix "
              "embedding calculus";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<IndexError>(m, "BasisIndexError", PyExc_KeyError);
    py::register_exception<FieldMismatchError>(m, "FieldMismatchError", PyExc_TypeError);

    py::class_<AlgebraElement>(m, "Element")
        .def(py::init<>())
        .def("is_zero", &AlgebraElement::is_zero)
        .def("support_size", &AlgebraElement::support_size)
        .def("__add__", [](const AlgebraElement& a, const AlgebraElement& b) { return a + b; })
        .def("__sub__", [](const AlgebraElement& a, const AlgebraElement& b) { return a - b; })
        .def("__neg__", [](const AlgebraElement& a) { return -a; })
        .def("__eq__", [](const AlgebraElement& a, const AlgebraElement& b) { return a == b; })
        .def("__repr__", [](const AlgebraElement& a) {
            return "<Element with " + std::to_string(a.support_size()) + " terms>";
        });

    py::class_<BandedElement>(m, "Banded")
        .def_static("cell",
                    [](std::int64_t i, std::int64_t j, const AlgebraElement& a) {
                        return BandedElement::cell(i, j, a);
                    })
        .def_static("band", [](std::int64_t k, const AlgebraElement& a) {
            return BandedElement::band(k, a);
        })
        .def("is_zero", &BandedElement::is_zero)
        .def("__add__", [](const BandedElement& a, const BandedElement& b) { return a + b; })
        .def("__sub__", [](const BandedElement& a, const BandedElement& b) { return a - b; })
        .def("__neg__", [](const BandedElement& a) { return -a; })
        .def("__eq__", [](const BandedElement& a, const BandedElement& b) { return a == b; });

    py::class_<GrowthTable>(m, "GrowthTable")
        .def_readonly("dims", &GrowthTable::dims)
        .def_readonly("bounds", &GrowthTable::bounds)
        .def("at", &GrowthTable::at, py::arg("n"))
        .def("csv",
             [](const GrowthTable& t) {
                 std::ostringstream os;
                 write_growth_csv(os, t);
                 return os.str();
             })
        .def("__len__", [](const GrowthTable& t) { return t.dims.size(); })
        .def("__repr__", [](const GrowthTable& t) {
            std::string s = "GrowthTable([";
            for (std::size_t i = 0; i < t.dims.size(); ++i)
                s += (i ? ", " : "") + std::to_string(t.dims[i]);
            return s + "])";
        });

    py::class_<PyAlgebra>(m, "Algebra")
        .def_static(
            "polynomial",
            [](std::uint32_t vars, std::uint64_t p, std::vector<std::string> names) {
                return PyAlgebra{make_polynomial(field_of(p), vars, std::move(names))};
            },
            py::arg("vars"), py::arg("p") = 0, py::arg("names") = std::vector<std::string>{})
        .def_static(
            "free_associative",
            [](std::uint32_t gens, std::uint64_t p, std::vector<std::string> names) {
                return PyAlgebra{make_free_associative(field_of(p), gens, std::move(names))};
            },
            py::arg("gens"), py::arg("p") = 0, py::arg("names") = std::vector<std::string>{})
        .def_static(
            "structure_constants",
            [](std::uint32_t dim,
               const std::vector<std::tuple<std::uint32_t, std::uint32_t,
                                            std::vector<std::tuple<std::uint32_t, std::int64_t,
                                                                   std::int64_t>>>>& products,
               const std::vector<std::tuple<std::uint32_t, std::int64_t, std::int64_t>>& unit,
               std::uint64_t p, std::vector<std::string> names) {
                const FieldSpec field = field_of(p);
                StructureConstantsBuilder b(field, dim);
                if (!names.empty()) b.set_names(std::move(names));
                for (const auto& [i, j, terms] : products)
                    b.set_product(i, j, scaled_terms(field, terms));
                if (!unit.empty()) b.set_unit(scaled_terms(field, unit));
                return PyAlgebra{b.build()};
            },
            py::arg("dim"), py::arg("products"),
            py::arg("unit") = std::vector<std::tuple<std::uint32_t, std::int64_t, std::int64_t>>{},
            py::arg("p") = 0, py::arg("names") = std::vector<std::string>{})
        .def_static(
            "enveloping",
            [](std::uint32_t dim,
               const std::vector<std::tuple<std::uint32_t, std::uint32_t,
                                            std::vector<std::tuple<std::uint32_t, std::int64_t,
                                                                   std::int64_t>>>>& brackets,
               std::uint64_t p, std::vector<std::string> names, std::vector<std::uint32_t> order) {
                const FieldSpec field = field_of(p);
                EnvelopingBuilder b(field, dim);
                if (!names.empty()) b.set_names(std::move(names));
                if (!order.empty()) b.set_order(std::move(order));
                for (const auto& [i, j, terms] : brackets)
                    b.set_bracket(i, j, scaled_terms(field, terms));
                return PyAlgebra{b.build()};
            },
            py::arg("dim"), py::arg("brackets"), py::arg("p") = 0,
            py::arg("names") = std::vector<std::string>{},
            py::arg("order") = std::vector<std::uint32_t>{})
        .def_static("matrix_extend",
                    [](const PyAlgebra& inner) { return PyAlgebra{matrix_extend(inner.ptr)}; })
        .def_static("adjoin_unit",
                    [](const PyAlgebra& alg) { return PyAlgebra{adjoin_unit(alg.ptr)}; })
        .def("describe", [](const PyAlgebra& a) { return a.ref().describe(); })
        .def("is_unital", [](const PyAlgebra& a) { return a.ref().is_unital(); })
        .def("one", [](const PyAlgebra& a) { return a.ref().one(); })
        .def(
            "element",
            [](const PyAlgebra& a, const std::string& name, std::int64_t num, std::int64_t den) {
                return AlgebraElement::term(a.ref().parse_index(name),
                                            Scalar::fraction(a.ref().field(), num, den));
            },
            py::arg("name"), py::arg("num") = 1, py::arg("den") = 1)
        .def("element_from_triples",
             [](const PyAlgebra& a, const PyTriples& triples) {
                 return a.ref().element_from_triples(triples);
             })
        .def("mul", [](const PyAlgebra& a, const AlgebraElement& x, const AlgebraElement& y) {
            return a.ref().mul(x, y);
        })
        .def("commutator",
             [](const PyAlgebra& a, const AlgebraElement& x, const AlgebraElement& y) {
                 return a.ref().commutator(x, y);
             })
        .def("str",
             [](const PyAlgebra& a, const AlgebraElement& x) { return a.ref().element_str(x); })
        .def("mul_banded", [](const PyAlgebra& a, const BandedElement& x, const BandedElement& y) {
            return mul_banded(a.ref(), x, y);
        })
        .def("bracket_banded",
             [](const PyAlgebra& a, const BandedElement& x, const BandedElement& y) {
                 return bracket(a.ref(), x, y);
             })
        .def("banded_str",
             [](const PyAlgebra& a, const BandedElement& x) { return banded_str(a.ref(), x); })
        .def("__repr__", [](const PyAlgebra& a) { return "<Algebra " + a.ref().describe() + ">"; });

    m.def(
        "assoc_growth",
        [](const PyAlgebra& alg, const std::vector<AlgebraElement>& gens, int n_max) {
            return run_growth(alg, gens, n_max, false).table;
        },
        py::arg("algebra"), py::arg("gens"), py::arg("n_max"));
    m.def(
        "lie_growth",
        [](const PyAlgebra& alg, const std::vector<AlgebraElement>& gens, int n_max) {
            return run_growth(alg, gens, n_max, true).table;
        },
        py::arg("algebra"), py::arg("gens"), py::arg("n_max"),
        "bracket = the structure-constant table itself, or the commutator of an associative "
        "ambient");
    m.def(
        "brute_force_span",
        [](const PyAlgebra& alg, const std::vector<AlgebraElement>& gens, int n, bool lie,
           int cap) {
            const BaseAlgebra& a = alg.ref();
            auto mul = [&a, lie](const AlgebraElement& x, const AlgebraElement& y) {
                return lie && a.kind() != BaseAlgebra::Kind::StructureConstants
                           ? a.commutator(x, y)
                           : a.mul(x, y);
            };
            return brute_force_span<AlgebraElement>(gens, mul, n, cap);
        },
        py::arg("algebra"), py::arg("gens"), py::arg("n"), py::arg("lie") = false,
        py::arg("cap") = 6);
    m.def(
        "asym_leq",
        [](const std::vector<std::uint64_t>& f, const std::vector<std::uint64_t>& g,
           std::uint32_t c_max, int n_range) -> std::optional<std::uint32_t> {
            GrowthTable ft, gt;
            ft.dims = f;
            gt.dims = g;
            return asym_leq(ft, gt, c_max, n_range);
        },
        py::arg("f"), py::arg("g"), py::arg("c_max"), py::arg("n_range"));

    m.def(
        "truncation_oracle",
        [](const PyAlgebra& alg, std::int64_t window, std::int64_t truncation, int trials,
           std::uint64_t seed) {
            OracleParams params;
            params.window = window;
            params.truncation = truncation;
            params.trials = trials;
            params.seed = seed;
            const OracleOutcome o = run_truncation_oracle(alg.ref(), params);
            return py::make_tuple(o.ok, o.failed_trial, o.detail);
        },
        py::arg("algebra"), py::arg("window") = 8, py::arg("truncation") = 16,
        py::arg("trials") = 500, py::arg("seed") = 42);

    py::class_<EmbeddingScenario>(m, "Scenario")
        .def(py::init([](const PyAlgebra& alg, const std::vector<AlgebraElement>& elems,
                         int n_max) { return EmbeddingScenario(alg.ptr, elems, n_max); }),
             py::arg("algebra"), py::arg("elements"), py::arg("n_max"));

    m.def("build_generators", &build_generators);
    m.def("phi", &phi);
    m.def(
        "verify_phi",
        [](const EmbeddingScenario& s, int trials, std::uint64_t seed) {
            return report_rows(verify_phi(s, trials, seed));
        },
        py::arg("scenario"), py::arg("trials") = 500, py::arg("seed") = 42);
    m.def("verify_commutator_image",
          [](const EmbeddingScenario& s) { return report_rows(verify_commutator_image(s)); });
    m.def("verify_inclusion",
          [](const EmbeddingScenario& s) { return report_rows(verify_inclusion(s)); });
    m.def("verify_growth_bound", [](const EmbeddingScenario& s) {
        GrowthBoundResult r = verify_growth_bound(s);
        return py::make_tuple(report_rows(r.report), r.base_table, r.banded_table);
    });
    m.def(
        "matrix_commutator_comparison",
        [](const PyAlgebra& base, const std::vector<AlgebraElement>& gens, int n_max) {
            MatrixComparisonResult r = matrix_commutator_comparison(base.ptr, gens, n_max);
            return py::make_tuple(report_rows(r.report), r.assoc_table, r.lie_table);
        },
        py::arg("base"), py::arg("gens"), py::arg("n_max"));
    m.def(
        "pipeline_growth",
        [](const PyAlgebra& enveloping, int n_max) {
            PipelineResult r = pipeline_growth(enveloping.ptr, n_max);
            py::dict out;
            out["report"] = report_rows(r.report);
            out["u_table"] = r.u_table;
            out["lemma_base"] = r.lemma_base;
            out["lemma_banded"] = r.lemma_banded;
            out["cc_assoc"] = r.cc_assoc;
            out["cc_lie"] = r.cc_lie;
            return out;
        },
        py::arg("enveloping"), py::arg("n_max"));

    m.def("cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
