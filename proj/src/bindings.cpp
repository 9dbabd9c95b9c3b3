#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include <json.hpp>

#include "agsg/cli.hpp"
#include "agsg/codes.hpp"

namespace py = pybind11;
using namespace agsg;

namespace {

Place place_of(const Curve& c, const std::string& name) {
    if (name == "P") return c.placeP();
    if (name == "Q") return c.placeQ();
    throw DomainError("place must be 'P' or 'Q'");
}

// JSON strings cross the boundary; the python wrapper json.loads them.
std::string semigroup_json(const Curve& c, long B) {
    NearWeight wr(c, c.placeP()), ws(c, c.placeQ());
    SemigroupView v = compute_H(wr, ws, B);
    GammaSets gs = gamma_sets(v);
    auto pts = [](const std::vector<GridPoint>& ps) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const GridPoint& p : ps) a.push_back({p.a, p.b});
        return a;
    };
    nlohmann::ordered_json j;
    j["schema"] = "agsemigroup/1";
    j["B"] = B;
    j["genus"] = c.genus();
    j["gaps"] = pts(v.gapSet);
    j["gamma_tilde"] = pts(v.gammaTilde);
    j["gamma_plus"] = pts(gs.plus);
    j["pure_gaps"] = pts(pure_gaps(v));
    j["gen_x"] = v.genX;
    j["gen_y"] = v.genY;
    j["conductor"] = {v.conductor.a, v.conductor.b};
    j["ascii"] = v.ascii();
    return j.dump(2);
}

std::string code_json(const Curve& c, long m, long n, long long distance_cap) {
    EvalCode code = build_code(c, m, n, default_points(c));
    nlohmann::ordered_json j;
    j["schema"] = "agsemigroup/1";
    j["N"] = code.N();
    j["k"] = code.k;
    j["trivial"] = code.trivial;
    if (code.dLower) j["d_lower"] = *code.dLower;
    if (!code.trivial) {
        try {
            j["d_exact"] = min_distance(code, distance_cap);
        } catch (const TooLarge&) {
        }
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : code.genMatrix) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const Felt& e : row) r.push_back(e.str());
        rows.push_back(r);
    }
    j["generator_matrix"] = rows;
    return j.dump(2);
}

std::string check_axioms_json(const Curve& c, int max_factors, uint64_t seed) {
    NearWeight wr(c, c.placeP()), ws(c, c.placeQ());
    CheckOptions opt;
    opt.seed = seed;
    return check_axioms(wr, ws, default_pool(c, max_factors), opt).to_json();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "two-point Weierstrass semigroups, near weights and evaluation codes";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<Func>(m, "Func")
        .def("__str__", &Func::str)
        .def("__repr__", [](const Func& f) { return "Func(" + f.str() + ")"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def("__eq__", [](const Func& a, const Func& b) { return a == b; })
        .def("__pow__", [](const Func& f, long e) { return f.pow(e); })
        .def("inv", &Func::inv)
        .def("is_zero", &Func::is_zero)
        .def("valuation",
             [](const Func& f, const Curve& c, const std::string& place) { return f.valuation(place_of(c, place)); },
             py::arg("curve"), py::arg("place"), "Exact valuation at the designated place 'P' or 'Q'.");

    py::class_<Curve>(m, "Curve")
        .def_static("hermitian", &Curve::hermitian, py::arg("q"),
                    "The Hermitian curve y^q + y = x^(q+1) over GF(q^2).")
        .def_static("projective_line", [](int q) { return Curve::projective_line(field_of_order(q)); }, py::arg("q"),
                    "The projective line over GF(q).")
        .def("genus", &Curve::genus)
        .def("q", &Curve::q)
        .def("field_order", [](const Curve& c) { return c.field().card(); })
        .def("parse", &Curve::parse, py::arg("text"), "Parse a function like '(x^2 + w*y)/(x)'.")
        .def("x", &Curve::x)
        .def("y", &Curve::y);

    py::class_<NearWeight>(m, "NearWeight")
        .def(py::init([](const Curve& c, const std::string& place) { return NearWeight(c, place_of(c, place)); }),
             py::arg("curve"), py::arg("place"))
        .def("rho",
             [](const NearWeight& w, const Func& f) -> std::optional<long> {
                 ExtInt r = w.rho(f);
                 if (r.is_neg_inf()) return std::nullopt;
                 return r.value();
             },
             py::arg("f"), "Near weight; None for the zero function.")
        .def("in_M", &NearWeight::in_M, py::arg("f"))
        .def("tilde_rho", [](const NearWeight& w, const Func& f) { return w.tilde_rho(f); }, py::arg("f"))
        .def("v_rho",
             [](const NearWeight& w, const Func& num, const Func& den) -> std::optional<long> {
                 ExtInt v = w.v_rho(num, den);
                 if (v.is_pos_inf()) return std::nullopt;
                 return v.value();
             },
             py::arg("num"), py::arg("den"), "Reconstructed valuation of num/den; None for zero.");

    m.def("semigroup_json", &semigroup_json, py::arg("curve"), py::arg("bound"));
    m.def("code_json", &code_json, py::arg("curve"), py::arg("m"), py::arg("n"),
          py::arg("distance_cap") = (1LL << 20));
    m.def("check_axioms_json", &check_axioms_json, py::arg("curve"), py::arg("max_factors") = 3,
          py::arg("seed") = 1);
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line front end; returns (exit_code, stdout, stderr).");
}
