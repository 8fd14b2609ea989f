// Python bindings for the main pipeline operations. Polynomials and
// axial functions cross the boundary in their JSON document form, so the
// Python surface matches the CLI file formats exactly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bireg/error.hpp"
#include "bireg/json_io.hpp"

namespace py = pybind11;
using namespace bireg;

namespace {

py::object json_to_py(const json& j)
{
    switch (j.type()) {
    case json::value_t::null:
        return py::none();
    case json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
        return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
        return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float:
        return py::float_(j.get<double>());
    case json::value_t::string:
        return py::str(j.get<std::string>());
    case json::value_t::array: {
        py::list out;
        for (const auto& v : j)
            out.append(json_to_py(v));
        return out;
    }
    case json::value_t::object: {
        py::dict out;
        for (const auto& [k, v] : j.items())
            out[py::str(k)] = json_to_py(v);
        return out;
    }
    default:
        throw schema_error("unsupported JSON value type");
    }
}

json py_to_json(const py::handle& h)
{
    if (h.is_none())
        return nullptr;
    if (py::isinstance<py::bool_>(h))
        return h.cast<bool>();
    if (py::isinstance<py::int_>(h))
        return h.cast<long long>();
    if (py::isinstance<py::float_>(h))
        return h.cast<double>();
    if (py::isinstance<py::str>(h))
        return h.cast<std::string>();
    if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
        json out = json::array();
        for (const auto& v : h)
            out.push_back(py_to_json(v));
        return out;
    }
    if (py::isinstance<py::dict>(h)) {
        json out = json::object();
        for (const auto& [k, v] : h.cast<py::dict>())
            out[k.cast<std::string>()] = py_to_json(v);
        return out;
    }
    throw schema_error("unsupported Python value in JSON conversion");
}

JobDescriptor make_descriptor(int m, int k, int l, int n, int p,
                              const std::optional<std::vector<int>>& left,
                              const std::optional<std::vector<int>>& right)
{
    JobDescriptor d{m, k, l, n, p, std::nullopt};
    if (left || right)
        d.P = GeneratorDescriptor{left.value_or(std::vector<int>{}),
                                  right.value_or(std::vector<int>{})};
    return d;
}

AxialFunction axial_from_py(const py::handle& h)
{
    return axial_from_json(py_to_json(h));
}

}  // namespace

PYBIND11_MODULE(_bireg, mod)
{
    mod.doc() = "Exact Clifford-algebra engine for the biregular Fueter map";

    py::register_exception<Error>(mod, "BiregError");

    mod.def(
        "run_job",
        [](int m, int k, int l, int n, int p, const std::optional<std::vector<int>>& left,
           const std::optional<std::vector<int>>& right) {
            JobDescriptor d = make_descriptor(m, k, l, n, p, left, right);
            return json_to_py(result_to_json(d, run_and_certify(build_job(d))));
        },
        py::arg("m"), py::arg("k"), py::arg("l"), py::arg("n"), py::arg("p"),
        py::arg("left") = std::nullopt, py::arg("right") = std::nullopt,
        "Run both pipeline routes for a separable job and return the certified result document.");

    mod.def(
        "fueter_map",
        [](int m, int k, int l, int n, int p, const std::optional<std::vector<int>>& left,
           const std::optional<std::vector<int>>& right) {
            JobDescriptor d = make_descriptor(m, k, l, n, p, left, right);
            return json_to_py(poly_to_json(fueter_map(build_job(d))));
        },
        py::arg("m"), py::arg("k"), py::arg("l"), py::arg("n"), py::arg("p"),
        py::arg("left") = std::nullopt, py::arg("right") = std::nullopt,
        "Direct route only; returns the output polynomial document.");

    mod.def(
        "classical_fueter",
        [](int m, int k, int n, const std::vector<int>& left) {
            return json_to_py(poly_to_json(classical_fueter(m, k, n, left)));
        },
        py::arg("m"), py::arg("k"), py::arg("n"), py::arg("left") = std::vector<int>{},
        "Monogenic degenerate case; returns the output polynomial document.");

    mod.def(
        "double_factorial_product",
        [](int k, int m, int n) { return py::cast(double_factorial_product(k, m, n).str()); },
        py::arg("k"), py::arg("m"), py::arg("n"),
        "prod_{j=1}^n (2k + m - (2j-1)), as a decimal string.");

    mod.def(
        "biregular_residuals",
        [](const py::dict& poly) {
            auto [dx, dy] = biregular_residuals(poly_from_json(py_to_json(poly)));
            return py::make_tuple(json_to_py(poly_to_json(dx)), json_to_py(poly_to_json(dy)));
        },
        py::arg("poly"), "Both generalized Cauchy-Riemann residuals of a polynomial document.");

    mod.def(
        "is_biregular",
        [](const py::dict& poly) {
            auto [dx, dy] = biregular_residuals(poly_from_json(py_to_json(poly)));
            return dx.is_zero() && dy.is_zero();
        },
        py::arg("poly"));

    mod.def(
        "lemma1_residual",
        [](int which, const py::handle& f, int var, int n) {
            if (which < 1 || which > 5)
                throw precondition_error("identity index must be in 1..5");
            if (var < 0 || var > 3)
                throw precondition_error("variable index must be in 0..3");
            auto res = lemma1_residual(static_cast<Lemma1Identity>(which - 1), axial_from_py(f),
                                       static_cast<AxialVar>(var), n);
            return json_to_py(axial_to_json(res));
        },
        py::arg("which"), py::arg("f"), py::arg("var"), py::arg("n"),
        "Residual of operator identity `which` (1..5) on an axial document; zero when it holds.");

    mod.def(
        "eval_poly",
        [](const py::dict& poly, const std::vector<double>& x, const std::vector<double>& y) {
            CliffPoly p = poly_from_json(py_to_json(poly));
            py::dict out;
            for (const auto& [mask, val] : eval_poly(p, EvalPoint{x, y}))
                out[py::str(blade_key(mask))] = val;
            return out;
        },
        py::arg("poly"), py::arg("x"), py::arg("y"),
        "Evaluate a polynomial document at a point; blade key -> float.");

    mod.def(
        "fd_cr_residuals",
        [](const py::dict& poly, const std::vector<double>& x, const std::vector<double>& y,
           double step, int order) {
            CliffPoly p = poly_from_json(py_to_json(poly));
            FdConfig cfg{step, order, 1e-6};
            auto f = poly_function(p);
            EvalPoint pt{x, y};
            int m = p.generators();
            return py::make_tuple(fd_cr_residual(f, m, {Block::X, Side::Left, true}, pt, cfg),
                                  fd_cr_residual(f, m, {Block::Y, Side::Right, true}, pt, cfg));
        },
        py::arg("poly"), py::arg("x"), py::arg("y"), py::arg("step") = 1e-3,
        py::arg("order") = 4,
        "Finite-difference Cauchy-Riemann residuals of a polynomial document at a point.");
}
