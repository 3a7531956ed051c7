#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qlax/commands.hpp"
#include "qlax/diffpoly.hpp"
#include "qlax/error.hpp"
#include "qlax/expr.hpp"
#include "qlax/matrix.hpp"
#include "qlax/psdo.hpp"
#include "qlax/qseries.hpp"
#include "qlax/render.hpp"

namespace py = pybind11;
using namespace qlax;

namespace {

using Rows = std::vector<std::vector<std::string>>;
using Result = std::tuple<int, std::string, std::string>;

RatMatrix to_matrix(const Rows& rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) {
        auto& out = r.emplace_back();
        for (const auto& x : row) {
            out.push_back(Rational::parse(x));
        }
    }
    return RatMatrix::from_rows(r);
}

Rows from_matrix(const RatMatrix& m, int n) { return m.to_strings(n); }

QSeries<RatMatrix> to_series(const std::vector<Rows>& coeffs) {
    std::vector<RatMatrix> c;
    for (const auto& m : coeffs) {
        c.push_back(to_matrix(m));
    }
    return QSeries<RatMatrix>(std::move(c));
}

std::vector<Rows> from_series(const QSeries<RatMatrix>& s, int n) {
    std::vector<Rows> out;
    for (const auto& c : s.coeffs()) {
        out.push_back(from_matrix(c, n));
    }
    return out;
}

int series_dim(const std::vector<Rows>& coeffs) { return coeffs.empty() ? 0 : static_cast<int>(coeffs.front().size()); }

CommonOptions options(const std::string& format, std::optional<int> qorder, std::optional<int> depth,
                      std::uint64_t seed, std::optional<std::string> probe_set) {
    CommonOptions o;
    o.format = resolve_format(format, nullptr);
    o.qorder = qorder;
    o.depth = depth;
    o.seed = seed;
    o.probe_set = std::move(probe_set);
    return o;
}

Result unpack(const CommandResult& r) { return {r.exit_code, r.out, r.err}; }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact q-deformed Lax calculus";

    py::register_exception<Error>(m, "QlaxError", PyExc_ValueError);

    py::class_<PsdoSymbol>(m, "Symbol")
        .def(py::init([](const std::string& text) { return parse_operator(text); }), py::arg("text"))
        .def_static("kdv_L", [] { return kdv_pair().L; })
        .def_static("kdv_P", [] { return kdv_pair().P; })
        .def_property_readonly("order", &PsdoSymbol::order)
        .def_property_readonly("floor", &PsdoSymbol::floor)
        .def("coeff", [](const PsdoSymbol& s, int k) { return s.coeff(k).to_string(); })
        .def("truncated", &PsdoSymbol::truncated)
        .def("json", [](const PsdoSymbol& s) { return symbol_json(s).dump(); })
        .def("__add__", [](const PsdoSymbol& a, const PsdoSymbol& b) { return a + b; })
        .def("__sub__", [](const PsdoSymbol& a, const PsdoSymbol& b) { return a - b; })
        .def("__mul__", [](const PsdoSymbol& a, const PsdoSymbol& b) { return a * b; })
        .def("__eq__", [](const PsdoSymbol& a, const PsdoSymbol& b) { return a == b; })
        .def("__str__", &PsdoSymbol::to_string)
        .def("__repr__", [](const PsdoSymbol& s) { return "Symbol('" + s.to_string() + "')"; });

    m.def("commutator", [](const PsdoSymbol& a, const PsdoSymbol& b) { return psdo_commutator(a, b); });
    m.def("dx", [](const std::string& poly, int times) { return dp_parse(poly).dx(times).to_string(); },
          py::arg("poly"), py::arg("times") = 1);

    m.def("mat_random", [](int n, std::uint64_t seed, int bound) { return from_matrix(mat_random(n, seed, bound), n); },
          py::arg("n"), py::arg("seed"), py::arg("bound") = 2);
    m.def("mat_invert", [](const Rows& rows) {
        return from_matrix(mat_invert(to_matrix(rows)), static_cast<int>(rows.size()));
    });
    m.def("q_exp", [](const std::vector<Rows>& s) { return from_series(q_exp(to_series(s)), series_dim(s)); },
          "q_exp of a matrix q-series given as its coefficient list");
    m.def("q_log", [](const std::vector<Rows>& s) { return from_series(q_log(to_series(s)), series_dim(s)); });

    m.def("kdv_verify",
          [](std::optional<std::string> perturb, const std::string& format) {
              std::optional<Rational> eps;
              if (perturb) {
                  eps = Rational::parse(*perturb);
              }
              return unpack(cmd_kdv_verify(eps, options(format, {}, {}, 0, {})));
          },
          py::arg("perturb") = py::none(), py::arg("format") = "json");
    m.def("lax_solve",
          [](const std::string& problem, const std::string& format, std::optional<int> qorder,
             std::optional<int> depth, std::uint64_t seed) {
              return unpack(cmd_lax_solve(problem, options(format, qorder, depth, seed, {})));
          },
          py::arg("problem"), py::arg("format") = "json", py::arg("qorder") = py::none(),
          py::arg("depth") = py::none(), py::arg("seed") = 0);
    m.def("symmetry",
          [](const std::string& problem, const std::string& format, std::optional<int> qorder, std::uint64_t seed,
             std::optional<std::string> probe_set) {
              return unpack(cmd_symmetry(problem, options(format, qorder, {}, seed, std::move(probe_set))));
          },
          py::arg("problem"), py::arg("format") = "json", py::arg("qorder") = py::none(), py::arg("seed") = 0,
          py::arg("probe_set") = py::none());
    m.def("convergence",
          [](const std::string& problem, const std::vector<std::string>& qs, std::optional<int> refN,
             const std::string& format, std::optional<int> qorder) {
              std::vector<Rational> points;
              for (const auto& q : qs) {
                  points.push_back(Rational::parse(q));
              }
              return unpack(cmd_convergence(problem, points, refN, options(format, qorder, {}, 0, {})));
          },
          py::arg("problem"), py::arg("qs") = std::vector<std::string>{}, py::arg("refN") = py::none(),
          py::arg("format") = "json", py::arg("qorder") = py::none());
}
