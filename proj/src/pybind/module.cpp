#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tilekit/errors.hpp"
#include "tilekit/json_io.hpp"

namespace py = pybind11;
using namespace tilekit;

namespace {

ordered_json py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<std::int64_t>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::dict>(obj)) {
        ordered_json out = ordered_json::object();
        for (auto item : obj.cast<py::dict>())
            out[py::str(item.first).cast<std::string>()] = py_to_json(item.second);
        return out;
    }
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        ordered_json out = ordered_json::array();
        for (auto item : obj.cast<py::sequence>()) out.push_back(py_to_json(item));
        return out;
    }
    throw InvalidArgument("unsupported python value in tilekit input");
}

py::object json_to_py(const ordered_json& j) {
    switch (j.type()) {
        case ordered_json::value_t::null: return py::none();
        case ordered_json::value_t::boolean: return py::bool_(j.get<bool>());
        case ordered_json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case ordered_json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case ordered_json::value_t::number_float: return py::float_(j.get<double>());
        case ordered_json::value_t::string: return py::str(j.get<std::string>());
        case ordered_json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        default: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
    }
}

QuotientSpec make_quotient(int free_rank, const std::vector<std::int64_t>& torsion,
                           const std::vector<std::int64_t>& periods) {
    return QuotientSpec::make(GroupSpec::make(free_rank, torsion), periods);
}

std::vector<GroupElement> make_elements(const std::vector<std::vector<std::int64_t>>& coords) {
    std::vector<GroupElement> out;
    for (const auto& c : coords) out.push_back(GroupElement(c));
    return out;
}

std::vector<Rational> make_rationals(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    for (const auto& t : texts) out.push_back(Rational::parse(t));
    return out;
}

} // namespace

PYBIND11_MODULE(_tilekit, m) {
    m.doc() = "exact translational tiling toolkit";

    py::register_exception<InvalidArgument>(m, "InvalidArgumentError", PyExc_ValueError);
    py::register_exception<PremiseViolation>(m, "PremiseViolationError");
    py::register_exception<ConnectedRequired>(m, "ConnectedRequiredError");
    py::register_exception<StructureViolation>(m, "StructureViolationError");
    py::register_exception<LemmaViolation>(m, "LemmaViolationError");
    py::register_exception<CapacityExceeded>(m, "CapacityExceededError");
    py::register_exception<ArithmeticOverflow>(m, "ArithmeticOverflowError");

    m.def(
        "verify_tiling",
        [](int free_rank, std::vector<std::int64_t> torsion, std::vector<std::int64_t> periods,
           std::vector<std::vector<std::int64_t>> tile, std::vector<std::vector<std::int64_t>> set) {
            auto q = make_quotient(free_rank, torsion, periods);
            auto report = verify_tiling(q, make_elements(tile), PeriodicSet(q, make_elements(set)));
            return json_to_py(json_of(report));
        },
        py::arg("free_rank"), py::arg("torsion"), py::arg("periods"), py::arg("tile"),
        py::arg("set"));

    m.def(
        "dilation_scan",
        [](int free_rank, std::vector<std::int64_t> torsion, std::vector<std::int64_t> periods,
           std::vector<std::vector<std::int64_t>> tile, std::vector<std::vector<std::int64_t>> set,
           std::vector<std::int64_t> r_values) {
            auto q = make_quotient(free_rank, torsion, periods);
            auto entries =
                dilation_scan(q, make_elements(tile), PeriodicSet(q, make_elements(set)), r_values);
            return json_to_py(json_of(entries));
        },
        py::arg("free_rank"), py::arg("torsion"), py::arg("periods"), py::arg("tile"),
        py::arg("set"), py::arg("r_values"));

    m.def(
        "frobenius_check",
        [](int free_rank, std::vector<std::int64_t> torsion, std::vector<std::int64_t> periods,
           std::vector<std::vector<std::int64_t>> tile, std::int64_t p) {
            auto q = make_quotient(free_rank, torsion, periods);
            return json_to_py(json_of(frobenius_check(q, make_elements(tile), p)));
        },
        py::arg("free_rank"), py::arg("torsion"), py::arg("periods"), py::arg("tile"),
        py::arg("p"));

    m.def(
        "enumerate_tilings",
        [](int free_rank, std::vector<std::int64_t> torsion, std::vector<std::int64_t> periods,
           std::vector<std::vector<std::int64_t>> tile, std::int64_t max_solutions) {
            auto q = make_quotient(free_rank, torsion, periods);
            auto catalog = enumerate_tilings(q, make_elements(tile), max_solutions);
            return json_to_py(json_of(catalog, count_and_orbits(catalog)));
        },
        py::arg("free_rank"), py::arg("torsion"), py::arg("periods"), py::arg("tile"),
        py::arg("max_solutions") = std::int64_t(1) << 20);

    m.def(
        "decompose",
        [](int free_rank, std::vector<std::int64_t> torsion, std::vector<std::int64_t> periods,
           std::vector<std::vector<std::int64_t>> tile, std::vector<std::vector<std::int64_t>> set,
           bool prime_product) {
            auto q = make_quotient(free_rank, torsion, periods);
            PeriodicSet pset(q, make_elements(set));
            auto dec = decompose(q, make_elements(tile), pset, prime_product);
            auto check = check_decomposition(q, make_elements(tile), pset, dec);
            ordered_json out;
            out["decomposition"] = json_of(dec);
            out["check"] = json_of(check);
            return json_to_py(out);
        },
        py::arg("free_rank"), py::arg("torsion"), py::arg("periods"), py::arg("tile"),
        py::arg("set"), py::arg("prime_product") = false);

    m.def(
        "classify_interval",
        [](std::vector<std::string> positions, std::vector<std::string> breakpoints,
           std::vector<std::string> values, std::string a, std::string b) {
            RationalMultiset tile(make_rationals(positions));
            StepFunction psi(make_rationals(breakpoints), make_rationals(values));
            auto cls = classify_connected(tile, psi, Rational::parse(a), Rational::parse(b));
            return json_to_py(json_of(cls));
        },
        py::arg("positions"), py::arg("breakpoints"), py::arg("values"), py::arg("a"),
        py::arg("b"));

    m.def(
        "torus_verify",
        [](const py::object& shifts, const py::dict& set) {
            std::vector<std::vector<Rational>> rs;
            for (const auto& e : py_to_json(shifts)) rs.push_back(rational_vector_from_json(e));
            auto report = verify_rational_torus_tiling(rs, cellset_from_json(py_to_json(set)));
            return json_to_py(json_of(report));
        },
        py::arg("shifts"), py::arg("set"));

    m.def(
        "torus_slide",
        [](const py::object& shifts, const py::dict& set, int samples, std::uint64_t seed) {
            std::vector<SymbolicVector> sv;
            for (const auto& e : py_to_json(shifts)) sv.push_back(symbolic_vector_from_json(e));
            auto report =
                verify_symbolic_tiling(sv, cellset_from_json(py_to_json(set)), samples, seed);
            return json_to_py(json_of(report));
        },
        py::arg("shifts"), py::arg("set"), py::arg("samples") = 2, py::arg("seed") = 0);

    m.def(
        "torus_connected",
        [](const py::object& shifts, const py::dict& set) {
            std::vector<SymbolicVector> sv;
            for (const auto& e : py_to_json(shifts)) sv.push_back(symbolic_vector_from_json(e));
            return json_to_py(json_of(connected_case(sv, cellset_from_json(py_to_json(set)))));
        },
        py::arg("shifts"), py::arg("set"));

    m.def(
        "circle_rationality",
        [](const py::object& shifts, const py::dict& set, int samples, std::uint64_t seed) {
            std::vector<SymbolicScalar> ss;
            for (const auto& e : py_to_json(shifts)) ss.push_back(symbolic_scalar_from_json(e));
            auto report = circle_rationality(ss, cellset_from_json(py_to_json(set)), samples, seed);
            return json_to_py(json_of(report));
        },
        py::arg("shifts"), py::arg("set"), py::arg("samples") = 16, py::arg("seed") = 0);

    m.def(
        "assemble_circle",
        [](std::int64_t den, std::vector<std::int64_t> tile,
           std::vector<std::vector<std::int64_t>> assignment) {
            return json_to_py(json_of(assemble_circle_tiling(den, tile, assignment)));
        },
        py::arg("den"), py::arg("tile"), py::arg("assignment"));

    m.def(
        "sine_check",
        [](double t, std::int64_t samples, std::uint64_t seed) {
            return json_to_py(json_of(sine_multitile_check(t, samples, seed)));
        },
        py::arg("t"), py::arg("samples"), py::arg("seed"));

    m.def(
        "two_tile",
        [](std::int64_t n, std::uint64_t seed, std::int64_t start) {
            auto trace = simulate_two_tile(n, seed, start);
            ordered_json out;
            out["trace"] = json_of(trace);
            out["validation"] = json_of(validate_two_tile(trace));
            return json_to_py(out);
        },
        py::arg("n"), py::arg("seed"), py::arg("start") = 0);

    m.def(
        "vertical",
        [](std::int64_t n, std::uint64_t seed, int free_rank, std::vector<std::int64_t> torsion,
           std::vector<std::int64_t> periods, std::vector<std::vector<std::int64_t>> tile,
           std::vector<std::vector<std::int64_t>> set, std::int64_t start) {
            auto q = make_quotient(free_rank, torsion, periods);
            auto trace =
                simulate_vertical(n, seed, q, make_elements(tile), make_elements(set), start);
            ordered_json out;
            out["trace"] = json_of(trace);
            out["validation"] = json_of(validate_vertical(trace));
            return json_to_py(out);
        },
        py::arg("n"), py::arg("seed"), py::arg("free_rank"), py::arg("torsion"),
        py::arg("periods"), py::arg("tile"), py::arg("set"), py::arg("start") = 0);

    m.def(
        "triple_product_s3",
        [](std::vector<int> subgroup, int a) {
            return triple_product_check(FiniteGroupTable::symmetric3(), subgroup, a);
        },
        py::arg("subgroup"), py::arg("a"));

    m.def(
        "s3",
        [](std::int64_t n, std::uint64_t seed, std::vector<int> subgroup, int a,
           std::int64_t start) {
            auto g = FiniteGroupTable::symmetric3();
            auto trace = simulate_nonabelian_s3(n, seed, g, subgroup, a, start);
            ordered_json out;
            out["trace"] = json_of(trace);
            out["validation"] = json_of(validate_nonabelian(g, trace));
            return json_to_py(out);
        },
        py::arg("n"), py::arg("seed"), py::arg("subgroup"), py::arg("a"), py::arg("start") = 0);

    m.def(
        "render_svg",
        [](const py::dict& set, const py::object& shifts) {
            std::vector<RenderShift> rs;
            for (const auto& e : py_to_json(shifts)) {
                rs.push_back(RenderShift{e.at(0).get<int>(), e.at(1).get<double>(),
                                         e.at(2).get<double>()});
            }
            return render_svg(cellset_from_json(py_to_json(set)), rs);
        },
        py::arg("set"), py::arg("shifts"));
}
