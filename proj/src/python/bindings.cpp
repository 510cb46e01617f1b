// Python extension. Rationals cross the boundary as canonical "p/q" strings;
// the divcalc package converts them to fractions.Fraction.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "divcalc/analysis.hpp"
#include "divcalc/catalog.hpp"
#include "divcalc/model_io.hpp"
#include "divcalc/okounkov.hpp"
#include "divcalc/report.hpp"

namespace py = pybind11;
using namespace divcalc;

namespace {

using Strings = std::vector<std::string>;

QVec to_vec(const Strings& xs) {
    QVec v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) v[i] = parse_rational(xs[i]);
    return v;
}

void check_length(const LoadedModel& m, const QVec& d, const char* what) {
    const std::size_t n = m.is_surface() ? m.surface().rank() : m.toric().num_rays();
    if (d.size() != n)
        throw Error("dimension-mismatch", std::string(what) + " has " + std::to_string(d.size()) + " coordinates, model " +
                                              m.name() + " expects " + std::to_string(n));
}

const SurfaceModel& surface_of(const LoadedModel& m) {
    if (!m.is_surface()) throw Error("wrong-model-kind", m.name() + " is not a surface model");
    return m.surface();
}

const ToricModel& toric_of(const LoadedModel& m) {
    if (m.is_surface()) throw Error("wrong-model-kind", m.name() + " is not a toric model");
    return m.toric();
}

std::unique_ptr<Backend> backend_for(const LoadedModel& m) {
    if (m.is_surface()) return std::make_unique<SurfaceBackend>(m.surface());
    return std::make_unique<ToricNefBackend>(m.toric());
}

py::dict zariski(const LoadedModel& m, const Strings& d) {
    QVec dv = to_vec(d);
    check_length(m, dv, "D");
    const auto& s = surface_of(m);
    auto z = zariski_decompose(s, dv);
    py::list negative;
    for (const auto& c : z.negative)
        negative.append(py::make_tuple(c.generator, to_strings(s.psef_generators()[c.generator]), to_string(c.coefficient)));
    py::dict out;
    out["positive"] = to_strings(z.positive);
    out["negative"] = negative;
    return out;
}

std::string volume(const LoadedModel& m, const Strings& d) {
    QVec dv = to_vec(d);
    check_length(m, dv, "D");
    return to_string(m.is_surface() ? surface_volume(m.surface(), dv) : toric_volume(m.toric(), dv));
}

Strings s_seq(const LoadedModel& m, const Strings& d1, const Strings& d2) {
    QVec a = to_vec(d1), b = to_vec(d2);
    check_length(m, a, "D1");
    check_length(m, b, "D2");
    Strings out;
    for (const auto& x : s_sequence(*backend_for(m), a, b).values) out.push_back(to_string(x));
    return out;
}

std::string slope(const LoadedModel& m, const Strings& d1, const Strings& d2) {
    QVec a = to_vec(d1), b = to_vec(d2);
    check_length(m, a, "D1");
    check_length(m, b, "D2");
    return to_string(m.is_surface() ? slope_surface(m.surface(), a, b).slope : slope_toric(m.toric(), a, b));
}

std::string run(const std::string& command, const LoadedModel& m, const py::dict& kwargs) {
    RunArgs a;
    for (auto [key, value] : kwargs) {
        const std::string k = py::str(key);
        if (value.is_none()) continue;
        if (k == "d" || k == "d1" || k == "d2") {
            QVec v = to_vec(value.cast<Strings>());
            check_length(m, v, k.c_str());
            (k == "d" ? a.d : k == "d1" ? a.d1 : a.d2) = v;
        } else if (k == "m_max") {
            a.m_max = value.cast<long>();
        } else if (k == "seed") {
            a.seed = value.cast<std::uint64_t>();
        } else if (k == "count") {
            a.count = value.cast<long>();
        } else if (k == "flag") {
            a.flag = value.cast<std::vector<std::size_t>>();
        } else {
            throw Error("unknown-argument", "unknown argument " + k);
        }
    }
    return render_report(run_command(command, m, a), Format::json);
}

py::dict okounkov_sample(const LoadedModel& m, const Strings& d, long level, std::optional<std::vector<std::size_t>> flag) {
    const auto& t = toric_of(m);
    QVec dv = to_vec(d);
    check_length(m, dv, "D");
    ToricFlag f = flag ? make_flag(t, *flag) : default_flag(t);
    auto s = phi_points(t, dv, f, level);
    py::list pts;
    for (const auto& p : s.points) pts.append(to_strings(p));
    py::dict out;
    out["m"] = s.m;
    out["points"] = pts;
    out["hull_volume"] = to_string(s.hull_volume);
    return out;
}

std::string hull_volume(std::size_t dim, const std::vector<Strings>& points) {
    std::vector<QVec> pts;
    for (const auto& p : points) {
        pts.push_back(to_vec(p));
        if (pts.back().size() != dim) throw Error("dimension-mismatch", "point of the wrong dimension");
    }
    return to_string(polytope_volume(LatticePolytope::from_points(dim, pts)));
}

}  // namespace

PYBIND11_MODULE(_divcalc, mod) {
    mod.doc() = "Exact positive intersection products, Minkowski inequalities and Okounkov bodies";
    mod.attr("__version__") = kEngineVersion;

    static py::exception<Error> error(mod, "DivcalcError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::tuple args = py::make_tuple(e.code(), e.what());
            PyErr_SetObject(error.ptr(), args.ptr());
        }
    });

    py::class_<LoadedModel>(mod, "Model")
        .def_property_readonly("name", &LoadedModel::name)
        .def_property_readonly("kind", [](const LoadedModel& m) { return m.is_surface() ? "surface" : "toric"; })
        .def_property_readonly("class_length",
                               [](const LoadedModel& m) { return m.is_surface() ? m.surface().rank() : m.toric().num_rays(); })
        .def_property_readonly("dimension", [](const LoadedModel& m) { return m.is_surface() ? 2 : m.toric().dim(); })
        .def_property_readonly("hash", [](const LoadedModel& m) { return model_hash(m); })
        .def("canonical_text", [](const LoadedModel& m) { return canonical_model_text(m); })
        .def("__repr__", [](const LoadedModel& m) { return "<divcalc.Model " + m.name() + ">"; });

    mod.def("catalog_names", &catalog_names);
    mod.def("catalog_document", [](const std::string& n) { return catalog_document(n); });
    mod.def("load_model", &load_model, py::arg("spec"));
    mod.def("parse_model", [](const std::string& text) { return parse_model(text); }, py::arg("text"));
    mod.def("command_names", &command_names);

    mod.def("zariski", &zariski, py::arg("model"), py::arg("d"));
    mod.def("volume", &volume, py::arg("model"), py::arg("d"));
    mod.def("s_sequence", &s_seq, py::arg("model"), py::arg("d1"), py::arg("d2"));
    mod.def("slope", &slope, py::arg("model"), py::arg("d1"), py::arg("d2"));
    mod.def("run", &run, py::arg("command"), py::arg("model"), py::arg("kwargs"));
    mod.def("okounkov_sample", &okounkov_sample, py::arg("model"), py::arg("d"), py::arg("m"), py::arg("flag") = py::none());
    mod.def("hull_volume", &hull_volume, py::arg("dim"), py::arg("points"));
}
