#include "newton_widths/degeneracy.hpp"
#include "newton_widths/error.hpp"
#include "newton_widths/lattice.hpp"
#include "newton_widths/lp.hpp"
#include "newton_widths/newton.hpp"
#include "newton_widths/report.hpp"
#include "newton_widths/widths.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
namespace nw = newton_widths;

namespace {

// Rationals cross the boundary as fractions.Fraction; inputs may be int, str or Fraction.
nw::Rational to_rational(const py::handle& value) { return nw::parse_number(py::str(value).cast<std::string>()); }

py::object to_fraction(const nw::Rational& value) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(nw::to_string(value));
}

nw::PointSet to_point_set(const std::vector<std::vector<int>>& points) {
    if (points.empty()) throw nw::Error(nw::ErrorCode::InvalidArgument, "point set is empty");
    std::vector<nw::Monomial> list;
    for (const auto& p : points) list.push_back(nw::Monomial{p});
    return nw::PointSet(static_cast<int>(points.front().size()), list);
}

std::vector<std::vector<int>> to_lists(const nw::PointSet& s) {
    std::vector<std::vector<int>> out;
    for (const auto& m : s) out.push_back(m.exponents);
    return out;
}

nw::EnumerationConfig config(std::uint64_t cap, int threads) {
    nw::EnumerationConfig c;
    c.hard_cap = cap;
    c.threads = threads;
    return c;
}

}  // namespace

PYBIND11_MODULE(_newton_widths, m) {
    m.doc() = "Exact Newton-polytope invariants and lattice counts for polynomial symbols";

    static py::exception<nw::Error> error(m, "NewtonWidthsError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const nw::Error& e) {
            py::object exc = error;
            py::object instance = exc(std::string(e.what()));
            instance.attr("code") = nw::to_string(e.code());
            PyErr_SetObject(error.ptr(), instance.ptr());
        }
    });

    py::class_<nw::SymbolPolynomial>(m, "Symbol")
        .def(py::init([](const std::string& text, std::optional<int> d) { return nw::parse_polynomial(text, d); }),
             py::arg("text"), py::arg("d") = py::none())
        .def_static("from_json", [](const std::string& text) { return nw::parse_polynomial_json(text); })
        .def("to_json", [](const nw::SymbolPolynomial& p) { return nw::to_json_text(p); })
        .def_property_readonly("d", &nw::SymbolPolynomial::dimension)
        .def_property_readonly("exponents", [](const nw::SymbolPolynomial& p) { return to_lists(p.exponent_set()); })
        .def("__call__",
             [](const nw::SymbolPolynomial& p, const std::vector<py::object>& x) {
                 std::vector<nw::Rational> point;
                 for (const auto& v : x) point.push_back(to_rational(v));
                 return to_fraction(p.evaluate(std::span<const nw::Rational>(point)));
             })
        .def("__str__", &nw::SymbolPolynomial::render)
        .def("__repr__", [](const nw::SymbolPolynomial& p) { return "Symbol('" + p.render() + "')"; });

    m.def("newton_diagram", [](const std::vector<std::vector<int>>& b) { return to_lists(nw::newton_diagram(to_point_set(b))); });
    m.def("vertex_set", [](const std::vector<std::vector<int>>& b) { return to_lists(nw::vertex_set(to_point_set(b))); });
    m.def("mu", [](const std::vector<std::vector<int>>& b) { return to_fraction(nw::mu_of(to_point_set(b))); });
    m.def("rho", [](const std::vector<std::vector<int>>& b) { return to_fraction(nw::rho_of(to_point_set(b))); });
    m.def("nu", [](const std::vector<std::vector<int>>& b) { return nw::nu_of(to_point_set(b)); });

    m.def(
        "degeneracy_verdict",
        [](const nw::SymbolPolynomial& p, std::uint64_t seed) {
            nw::DegeneracyConfig c;
            c.seed = seed;
            const auto r = nw::degeneracy_report(p, c);
            py::dict out;
            out["verdict"] = nw::to_string(r.verdict);
            out["gamma_hat"] = r.gamma_hat;
            out["even_vertices"] = r.even_vertices;
            out["witness_faces"] = py::list();
            for (const auto& w : r.witnesses) out["witness_faces"].cast<py::list>().append(to_lists(w.support));
            return out;
        },
        py::arg("symbol"), py::arg("seed") = 0);

    m.def(
        "count_omega",
        [](const std::vector<std::vector<int>>& b, const py::object& t, std::uint64_t cap) {
            return nw::count_omega(to_point_set(b), to_rational(t), config(cap, 1));
        },
        py::arg("points"), py::arg("t"), py::arg("cap") = 100'000'000);
    m.def(
        "card_k",
        [](const nw::SymbolPolynomial& p, const py::object& t, std::uint64_t cap, int threads) {
            const auto threshold = to_rational(t);
            py::gil_scoped_release release;
            return nw::card_k(p, threshold, config(cap, threads));
        },
        py::arg("symbol"), py::arg("t"), py::arg("cap") = 100'000'000, py::arg("threads") = 1);
    m.def(
        "width_table",
        [](const nw::SymbolPolynomial& p, const std::vector<std::uint64_t>& n, std::uint64_t cap) {
            py::list rows;
            for (const auto& w : nw::width_estimates(p, n, config(cap, 1))) {
                rows.append(py::make_tuple(w.n, to_fraction(w.t_n), to_fraction(w.d_n_estimate), w.tie));
            }
            return rows;
        },
        py::arg("symbol"), py::arg("n"), py::arg("cap") = 100'000'000);
    m.def(
        "eps_bracket",
        [](const nw::SymbolPolynomial& p, const py::object& eps) {
            const auto b = nw::eps_dimension_bracket(p, to_rational(eps));
            return py::make_tuple(b.lower, b.upper);
        },
        py::arg("symbol"), py::arg("eps"));
    m.def(
        "fit_growth",
        [](const std::vector<std::pair<py::object, std::uint64_t>>& entries, int d) {
            nw::CountSeries s;
            for (const auto& [t, c] : entries) s.entries.emplace_back(to_rational(t), c);
            const auto f = nw::fit_growth(s, d);
            py::dict out;
            out["mu_hat"] = f.mu_hat;
            out["nu_hat"] = f.nu_hat;
            out["intercept"] = f.intercept;
            out["residual_by_nu"] = f.residual_by_nu;
            return out;
        },
        py::arg("series"), py::arg("d"));
    m.def(
        "analyze_json",
        [](const nw::SymbolPolynomial& p, bool fit, const py::object& t_max, bool force,
           const std::vector<std::uint64_t>& widths_n) {
            nw::AnalysisOptions o;
            o.fit = fit;
            o.t_max = to_rational(t_max);
            o.force = force;
            o.widths_n = widths_n;
            py::gil_scoped_release release;
            return nw::analyze(p, o).json;
        },
        py::arg("symbol"), py::arg("fit") = false, py::arg("t_max") = 1000000, py::arg("force") = false,
        py::arg("widths_n") = std::vector<std::uint64_t>{});
    m.attr("REPORT_SCHEMA") = nw::kReportSchema;
}
