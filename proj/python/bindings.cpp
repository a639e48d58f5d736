#include "fupdate/cli.hpp"
#include "fupdate/codes.hpp"
#include "fupdate/construct.hpp"
#include "fupdate/error.hpp"
#include "fupdate/fic.hpp"
#include "fupdate/io.hpp"
#include "fupdate/oracle.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace fupdate;

namespace {

using Rows = std::vector<std::vector<Elem>>;

Matrix to_matrix(const FieldPtr& f, const Rows& rows, std::size_t cols_if_empty) {
    for (const auto& r : rows)
        for (Elem e : r)
            if (!f->contains(e)) throw InvalidParams("entry " + std::to_string(e) + " outside field");
    return Matrix::from_rows(f, rows, cols_if_empty);
}

py::dict report_dict(const ConstructionReport& r) {
    py::dict d;
    d["method"] = to_string(r.scheme.method);
    d["length"] = r.length;
    d["S"] = r.scheme.S.to_rows();
    d["H"] = r.scheme.H.to_rows();
    d["precondition"] = r.precondition;
    d["checked"] = r.checked;
    if (r.bounds) d["bounds"] = py::make_tuple(r.bounds->lower, r.bounds->upper);
    else d["bounds"] = py::none();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Linear encoders for the function update problem";

    // translators registered later are tried first, so subclasses follow the base
    const auto& base = py::register_exception<Error>(m, "FupdateError");
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    py::class_<FunctionUpdateProblem>(m, "Problem")
        .def_static("from_json", &parse_problem, py::arg("text"))
        .def_static("load", [](const std::string& path) { return load_problem(path); })
        .def_static(
            "from_rows",
            [](std::uint64_t q, const Rows& a, std::size_t eps) {
                return FunctionUpdateProblem(to_matrix(Field::standard(q), a, 0), eps);
            },
            py::arg("q"), py::arg("A"), py::arg("epsilon"))
        .def_static(
            "striped",
            [](std::uint64_t q, const Rows& c, std::size_t a, std::size_t eps) {
                return FunctionUpdateProblem::striped(to_matrix(Field::standard(q), c, 0), a, eps);
            },
            py::arg("q"), py::arg("C"), py::arg("a"), py::arg("epsilon"))
        .def_property_readonly("q", &FunctionUpdateProblem::q)
        .def_property_readonly("m", &FunctionUpdateProblem::m)
        .def_property_readonly("n", &FunctionUpdateProblem::n)
        .def_property_readonly("epsilon", &FunctionUpdateProblem::epsilon)
        .def_property_readonly("A", [](const FunctionUpdateProblem& p) { return p.A().to_rows(); })
        .def("to_json", &serialize_problem)
        .def("__repr__", [](const FunctionUpdateProblem& p) {
            std::ostringstream os;
            os << "<Problem q=" << p.q() << " m=" << p.m() << " n=" << p.n()
               << " epsilon=" << p.epsilon() << ">";
            return os.str();
        });

    m.def(
        "interference",
        [](const FunctionUpdateProblem& p, std::uint64_t budget) {
            const auto s = enumerate_interference(p, budget);
            py::dict d;
            d["deltas"] = s.deltas;
            d["syndromes"] = s.syndromes;
            d["eta"] = s.eta;
            return d;
        },
        py::arg("problem"), py::arg("budget") = kDefaultBudget);

    m.def(
        "is_valid_encoder",
        [](const FunctionUpdateProblem& p, const Rows& s) {
            const auto v = is_valid_encoder(p, to_matrix(p.field(), s, p.m()));
            return py::make_tuple(v.valid, v.witness_syndrome ? py::cast(*v.witness_syndrome)
                                                              : py::none());
        },
        py::arg("problem"), py::arg("S"));

    m.def(
        "construct",
        [](const FunctionUpdateProblem& p, const std::string& method,
           std::optional<std::size_t> target_l) {
            if (method == "auto") return report_dict(auto_construct(p));
            return report_dict(construct(p, method_from_string(method), target_l));
        },
        py::arg("problem"), py::arg("method") = "auto", py::arg("target_l") = py::none());

    m.def(
        "optimal_codelength",
        [](const FunctionUpdateProblem& p, std::uint64_t max_space, std::uint64_t nodes) {
            OracleOptions opt;
            opt.max_space = max_space;
            opt.node_budget = nodes;
            const auto r = optimal_codelength(p, opt);
            py::dict d;
            d["l_opt"] = r.l_opt;
            d["S"] = r.S.to_rows();
            d["certified"] = r.certified;
            d["nodes"] = r.nodes;
            return d;
        },
        py::arg("problem"), py::arg("max_space") = OracleOptions{}.max_space,
        py::arg("nodes") = OracleOptions{}.node_budget);

    m.def(
        "bounds",
        [](const FunctionUpdateProblem& p) {
            const auto b = codelength_bounds(p);
            return py::make_tuple(b.lower, b.upper);
        },
        py::arg("problem"));

    m.def(
        "kq",
        [](std::uint64_t q, std::size_t m, std::size_t d, std::uint64_t budget) {
            const auto v = kq_value(q, m, d, budget);
            return py::make_tuple(v.k_lower, v.k_upper, to_string(v.source));
        },
        py::arg("q"), py::arg("m"), py::arg("d"), py::arg("budget") = 20'000'000);

    m.def(
        "covering_radius",
        [](std::uint64_t q, const Rows& g, const std::string& role) {
            if (role != "parity" && role != "generator") throw InvalidParams("role: " + role);
            const Matrix mat = to_matrix(Field::standard(q), g, 0);
            return covering_radius(mat, role == "parity" ? CodeRole::parity : CodeRole::generator);
        },
        py::arg("q"), py::arg("matrix"), py::arg("role") = "parity");

    m.def(
        "decode",
        [](const FunctionUpdateProblem& p, const Rows& s, const Vector& codeword,
           const Vector& stale) {
            return Decoder(p, to_matrix(p.field(), s, p.m())).decode(codeword, stale);
        },
        py::arg("problem"), py::arg("S"), py::arg("codeword"), py::arg("stale"));

    m.def(
        "simulate",
        [](const FunctionUpdateProblem& p, const Rows& s, std::uint64_t trials,
           std::uint64_t seed) {
            const auto st = random_round_trips(p, to_matrix(p.field(), s, p.m()), trials, seed);
            return py::make_tuple(st.trials, st.failures);
        },
        py::arg("problem"), py::arg("S"), py::arg("trials") = 1000, py::arg("seed") = 0);

    m.def(
        "fic_export", [](const FunctionUpdateProblem& p) { return export_fic(from_function_update(p)); },
        py::arg("problem"));

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "fupdate");
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
