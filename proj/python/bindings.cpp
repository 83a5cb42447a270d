#include <optional>
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "horn/error.hpp"
#include "horn/oracle.hpp"

namespace py = pybind11;
using namespace horn;

namespace {

// Triples arrive either as "a1,a2;b1,b2;c1,c2" (exact angles allowed) or as six floats.
ClassTriple to_triple(const py::object& tau) {
    if (py::isinstance<py::str>(tau)) return parse_triple(tau.cast<std::string>());
    auto v = tau.cast<std::vector<double>>();
    if (v.size() != 6) throw HornError(ErrorCode::ParseError, "a triple needs six angles");
    return ClassTriple::from_values({v[0], v[1], v[2], v[3], v[4], v[5]});
}

AnglePair to_pair(const py::object& p) {
    if (py::isinstance<py::str>(p)) {
        auto s = p.cast<std::string>();
        auto comma = s.find(',');
        if (comma == std::string::npos) throw HornError(ErrorCode::ParseError, "expected 'a1,a2'");
        return AnglePair(parse_angle(s.substr(0, comma)), parse_angle(s.substr(comma + 1)));
    }
    auto v = p.cast<std::pair<double, double>>();
    return AnglePair(v.first, v.second);
}

std::string dump(const nlohmann::json& j) { return j.dump(); }

HermitianForm form_of(const std::optional<Mat3>& h) {
    if (!h) return HermitianForm::J();
    HermitianForm f;
    f.entries = *h;
    if (!f.is_hermitian(1e-12)) throw HornError(ErrorCode::Degenerate, "form is not Hermitian");
    return f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multiplicative Horn problem for elliptic classes in PU(2,1)";

    static py::exception<HornError> horn_error(m, "HornError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const HornError& e) {
            py::set_error(horn_error, e.what());
        }
    });

    m.def(
        "_classify",
        [](const Mat3& g, const std::optional<Mat3>& h) { return dump(to_json(classify(GroupElement(g, form_of(h))))); },
        py::arg("g"), py::arg("form") = py::none());
    m.def(
        "angle_pair",
        [](const Mat3& g, const std::optional<Mat3>& h) {
            auto p = angle_pair(GroupElement(g, form_of(h)));
            return std::pair{p.a1.value, p.a2.value};
        },
        py::arg("g"), py::arg("form") = py::none());
    m.def("elliptic_rep", [](const py::object& p) { return elliptic_rep(to_pair(p)).m; });
    m.def(
        "layer_product",
        [](const Mat3& a, const Mat3& b, const Mat3& c, const std::optional<Mat3>& h) {
            const auto f = form_of(h);
            return std::string(to_string(layer_product(GroupElement(a, f), GroupElement(b, f), GroupElement(c, f))));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("form") = py::none());
    m.def("psi", [](const py::object& tau) {
        auto v = psi(to_triple(tau)).values();
        return std::vector<double>(v.begin(), v.end());
    });

    m.def("_linear_forms", [](const py::object& tau) { return dump(to_json(linear_forms(to_triple(tau)))); });
    m.def("_wall_catalog", [] {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& w : wall_catalog()) j.push_back(to_json(w));
        return dump(j);
    });
    m.def(
        "_active_walls",
        [](const py::object& tau, double tol) {
            auto t = to_triple(tau);
            nlohmann::json j = nlohmann::json::array();
            for (const auto& a : active_walls(t, tol > 0 ? tol : t.default_tol())) {
                auto w = to_json(wall_catalog()[a.index]);
                w["signed_distance"] = a.signed_distance;
                j.push_back(w);
            }
            return dump(j);
        },
        py::arg("tau"), py::arg("tol") = -1.0);
    m.def("_cell_table", [] { return dump(cell_table_json()); });
    m.def(
        "_member",
        [](const py::object& tau, double tol) {
            auto t = to_triple(tau);
            return dump(to_json(polytope_member(t, tol > 0 ? tol : t.default_tol())));
        },
        py::arg("tau"), py::arg("tol") = -1.0);
    m.def("surjective_pair",
          [](const py::object& a, const py::object& b) { return surjective_pair(to_pair(a), to_pair(b)); });

    m.def("u2_construct", [](const py::object& tau) {
        auto s = u2_construct(to_triple(tau));
        return py::make_tuple(s.A, s.B, s.C);
    });
    m.def("pu11_construct", [](double a, double b, double c) {
        auto s = pu11_construct({Angle(a), Angle(b), Angle(c)});
        return py::make_tuple(s.A, s.B, s.C);
    });

    m.def("decompfamily_witness", [] {
        auto d = decompfamily_witness();
        py::dict out;
        out["H"] = d.H.entries;
        out["A"] = d.A.m;
        out["B"] = d.B.m;
        out["C"] = d.C.m;
        return out;
    });
    m.def(
        "_find_witness",
        [](const py::object& tau, std::uint64_t seed, std::size_t budget) {
            SamplerConfig cfg;
            cfg.seed = seed;
            cfg.budget = budget;
            auto t = to_triple(tau);
            py::gil_scoped_release release;
            return dump(to_json(find_witness(t, cfg)));
        },
        py::arg("tau"), py::arg("seed") = 42, py::arg("budget") = 200000);

    m.def(
        "render_slice",
        [](const py::object& beta, const py::object& gamma, int res) {
            SliceSpec s = beta.is_none() ? SliceSpec::symmetric(res)
                                         : SliceSpec::fixed(to_pair(beta), to_pair(gamma), res);
            return render_slice(s);
        },
        py::arg("beta") = py::none(), py::arg("gamma") = py::none(), py::arg("res") = 600);
    m.def(
        "slice_counts",
        [](const py::object& beta, const py::object& gamma, int res) {
            SliceSpec s = beta.is_none() ? SliceSpec::symmetric(res)
                                         : SliceSpec::fixed(to_pair(beta), to_pair(gamma), res);
            auto r = rasterize_slice(s);
            py::dict out;
            out["omega"] = r.components(Layer::Omega);
            out["1"] = r.components(Layer::One);
            out["omega^2"] = r.components(Layer::Omega2);
            return out;
        },
        py::arg("beta") = py::none(), py::arg("gamma") = py::none(), py::arg("res") = 600);
}
