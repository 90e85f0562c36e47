#include "cli.hpp"

#include "exprings/diff.hpp"
#include "exprings/errors.hpp"
#include "exprings/io.hpp"
#include "exprings/models.hpp"
#include "exprings/rabinowitsch.hpp"
#include "exprings/tower.hpp"

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace exprings;

namespace {

BaseField field(const std::string& base) {
    if (base == "Q") return BaseField::rationals();
    if (base == "Qi") return BaseField::gaussian();
    throw DomainError("unknown base field '" + base + "' (expected Q or Qi)");
}

EPoly parse(const std::string& text, std::size_t nvars, const std::string& base) {
    return parse_epoly(text, nvars ? nvars : std::max<std::size_t>(1, max_variable_index(text)), field(base));
}

std::vector<EPoly> lift(const std::vector<EPoly>& ps) {
    std::size_t n = 0;
    for (const auto& p : ps) n = std::max(n, p.nvars());
    std::vector<EPoly> out;
    for (const auto& p : ps) {
        if (p.nvars() == n) {
            out.push_back(p);
            continue;
        }
        out.push_back(parse_epoly(p.to_string(), n, BaseField::gaussian()));
    }
    return out;
}

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::list strings(const std::vector<EPoly>& ps) {
    py::list l;
    for (const auto& p : ps) l.append(p.to_string());
    return l;
}

py::dict verdict(const DaggerVerdict& v) {
    py::dict d;
    d["holds"] = v.holds;
    d["layer"] = v.layer;
    d["witness"] = v.witness ? py::object(py::str(v.witness->to_string())) : py::object(py::none());
    d["tested"] = strings(v.tested);
    d["skipped"] = strings(v.skipped);
    d["verdict"] = v.describe();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact computations in free exponential polynomial rings";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
    py::register_exception<PartialityError>(m, "PartialityError", domain.ptr());
    py::register_exception<DaggerFailure>(m, "DaggerFailure", domain.ptr());

    py::class_<EPoly>(m, "EPoly")
        .def(py::init(&parse), py::arg("text"), py::arg("nvars") = 0, py::arg("base") = "Q")
        .def_static("variable", &EPoly::variable, py::arg("nvars"), py::arg("j"))
        .def_static("constant", [](std::size_t n, long c) { return EPoly::constant(n, Scalar(c)); })
        .def_property_readonly("nvars", &EPoly::nvars)
        .def_property_readonly("height", &EPoly::height)
        .def("is_zero", &EPoly::is_zero)
        .def("E", [](const EPoly& p) { return epoly_E(p); })
        .def("__pow__", [](const EPoly& p, unsigned e) { return p.pow(e); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__hash__", [](const EPoly& p) { return py::hash(py::str(p.to_string())); })
        .def("__str__", &EPoly::to_string)
        .def("__repr__", [](const EPoly& p) { return "EPoly('" + p.to_string() + "')"; })
        .def("to_json", [](const EPoly& p) { return to_python(to_json(p)); });

    m.def("E", [](const EPoly& p) { return epoly_E(p); });
    m.def("ord", [](const EPoly& p) { return ord(p).to_string(); });
    m.def("rank", &rank);
    m.def("layers", [](const EPoly& p) { return layer_decompose(p).components; });
    m.def("ord_reduce", [](const EPoly& p) {
        OrdReduction r = ord_reduce(p);
        return py::make_tuple(r.q, r.reduced);
    });

    m.def("partial", &partial_derivative, py::arg("p"), py::arg("j"));
    m.def("derive", [](const std::vector<EPoly>& action, const EPoly& p) {
        return apply_derivation(DerivationSpec{action}, p);
    });
    m.def("jacobian", &jacobian);

    m.def(
        "eval_series",
        [](const EPoly& p, const std::vector<std::vector<long>>& at, std::size_t order) {
            std::vector<TruncatedSeries> coords;
            for (const auto& c : at) {
                std::vector<Scalar> v(c.begin(), c.end());
                v.resize(order);
                coords.emplace_back(v, order);
            }
            return model_value_to_string(eval_epoly(p, ModelPoint::in_series(coords)));
        },
        py::arg("p"), py::arg("at"), py::arg("order") = 8);
    m.def(
        "eval_float",
        [](const EPoly& p, const std::vector<std::complex<double>>& at, const std::string& base) {
            return std::get<FloatValue>(eval_epoly(p, ModelPoint::in_floats(at), field(base)));
        },
        py::arg("p"), py::arg("at"), py::arg("base") = "Q");

    m.def(
        "member",
        [](const std::vector<EPoly>& gens, const EPoly& p, std::size_t budget) {
            std::vector<EPoly> all = gens;
            all.push_back(p);
            all = lift(all);
            EPoly q = all.back();
            all.pop_back();
            MembershipResult r = membership(IdealHandle(q.nvars(), all, budget), q);
            py::dict d;
            d["member"] = r.member;
            d["verified"] = r.verified;
            d["cofactors"] = r.cofactors;
            d["slice"] = r.slice;
            return d;
        },
        py::arg("generators"), py::arg("p"), py::arg("budget") = StepBudget::kDefault);
    m.def("intersect", [](const std::vector<EPoly>& gens, std::size_t r) {
        auto g = lift(gens);
        return intersect_subring(IdealHandle(g), r).generators();
    });
    m.def("augmentation", &augmentation, py::arg("u"), py::arg("layer"));
    m.def("dagger", [](const std::vector<EPoly>& gens) { return verdict(dagger_check(IdealHandle(lift(gens)))); });
    m.def(
        "saturate",
        [](const std::vector<EPoly>& gens, std::size_t max_iterations) {
            SaturationOutcome o = saturate_R1(IdealHandle(lift(gens)), max_iterations);
            py::dict d;
            d["success"] = o.success;
            d["iterations"] = o.iterations;
            d["generators"] = o.ideal.generators();
            py::list steps;
            for (const auto& s : o.steps) steps.append(py::make_tuple(s.added, s.source));
            d["steps"] = steps;
            d["dagger"] = verdict(o.dagger);
            d["certificate"] = o.certificate;
            d["certificate_verified"] = o.certificate_verified;
            return d;
        },
        py::arg("generators"), py::arg("max_iterations") = 32);
    m.def("rabinowitsch", [](const std::vector<EPoly>& h, const EPoly& g) {
        std::vector<EPoly> all = h;
        all.push_back(g);
        all = lift(all);
        EPoly gg = all.back();
        all.pop_back();
        return to_python(nullstellensatz_pipeline(all, gg).to_json());
    });

    py::class_<TowerIdeal>(m, "Tower")
        .def(py::init([](const std::vector<EPoly>& gens, std::size_t base_level) {
                 auto g = lift(gens);
                 return TowerIdeal(IdealHandle(g), base_level);
             }),
             py::arg("generators"), py::arg("base_level") = 0)
        .def_property_readonly("top_level", &TowerIdeal::top_level)
        .def("extend", [](const TowerIdeal& t, std::size_t levels) { return extend_to_E_ideal(t, levels); },
             py::arg("levels") = 1)
        .def("member", [](const TowerIdeal& t, const EPoly& u, std::optional<std::size_t> level) {
                 return t.member(u, level.value_or(t.top_level()));
             },
             py::arg("u"), py::arg("level") = py::none())
        .def("phi", &TowerIdeal::phi, py::arg("u"), py::arg("level"))
        .def("tracked", [](const TowerIdeal& t, std::size_t level) {
            std::vector<EPoly> out;
            for (const auto& row : t.decomposition(level).rows()) out.push_back(row.element);
            return out;
        })
        .def("to_json", [](const TowerIdeal& t) { return to_python(t.to_json()); });

    m.def("demo", &cli::demo, py::arg("json") = false, py::arg("seed") = py::none());
}
