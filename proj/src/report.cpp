#include "divcalc/report.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "divcalc/analysis.hpp"
#include "divcalc/okounkov.hpp"

namespace divcalc {

using nlohmann::json;

namespace {

json rat(const Rat& r) { return rational_to_json(r); }
json vec(const QVec& v) { return qvec_to_json(v); }

json interval(const IntervalR& i) { return {{"lo", rat(i.lo)}, {"hi", rat(i.hi)}}; }

json root_sum(const RootSum& r) {
    json terms = json::array();
    for (const auto& t : r.terms())
        terms.push_back({{"coefficient", rat(t.coefficient)}, {"radicand", t.radicand.get_str()}, {"index", t.index}});
    return {{"expr", r.to_string()}, {"terms", terms}};
}

json comparison(const Comparison& c) { return {{"order", to_string(c.order)}, {"margin", interval(c.margin)}}; }

json rats(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat(x));
    return a;
}

// ---- backend selection -----------------------------------------------------

struct Engine {
    std::shared_ptr<LoadedModel> linked;  // surface model behind a toric surface
    std::unique_ptr<Backend> backend;
    QVec d1, d2;
    bool mapped = false;
};

QVec map_class(const SurfaceLink& link, const QVec& d) {
    QVec out(link.class_map.front().size());
    for (std::size_t r = 0; r < d.size(); ++r) out += d[r] * link.class_map[r];
    return out;
}

const LoadedModel& linked_surface(const LoadedModel& m, std::shared_ptr<LoadedModel>& slot) {
    if (!slot) slot = std::make_shared<LoadedModel>(load_model(m.surface_link->model));
    if (!slot->is_surface()) throw Error("surface-link", "linked model " + m.surface_link->model + " is not a surface");
    return *slot;
}

// Toric pairs that are both nef use the polytope engine; other d = 2 toric
// pairs are pushed to the linked surface model.
Engine pick_engine(const LoadedModel& m, const QVec& d1, const QVec& d2) {
    Engine e;
    e.d1 = d1;
    e.d2 = d2;
    if (m.is_surface()) {
        e.backend = std::make_unique<SurfaceBackend>(m.surface());
        return e;
    }
    const auto& t = m.toric();
    if (d1.size() != t.num_rays() || d2.size() != t.num_rays())
        throw Error("dimension-mismatch", "toric divisors need " + std::to_string(t.num_rays()) + " coefficients");
    if ((is_nef_toric(t, d1) && is_nef_toric(t, d2)) || !m.surface_link) {
        e.backend = std::make_unique<ToricNefBackend>(t);
        return e;
    }
    const auto& s = linked_surface(m, e.linked);
    e.backend = std::make_unique<SurfaceBackend>(s.surface());
    e.d1 = map_class(*m.surface_link, d1);
    e.d2 = map_class(*m.surface_link, d2);
    e.mapped = true;
    return e;
}

const QVec& require(const std::optional<QVec>& v, const char* flag, std::size_t length) {
    if (!v) throw Error("missing-argument", std::string("this command needs ") + flag);
    if (v->size() != length)
        throw Error("dimension-mismatch", std::string(flag) + " " + to_string(*v) + " has " + std::to_string(v->size()) +
                                              " entries; the model expects " + std::to_string(length));
    return *v;
}

std::size_t class_length(const LoadedModel& m) { return m.is_surface() ? m.surface().rank() : m.toric().num_rays(); }

// ---- sections ----------------------------------------------------------------

json s_sequence_json(const SSequence& s) { return {{"backend", s.backend}, {"d", s.d}, {"values", rats(s.values)}}; }

json kt_json(const KtReport& kt) {
    json items = json::array();
    for (const auto& q : kt.inequalities)
        items.push_back({{"item", q.item}, {"index", q.index}, {"lhs", rat(q.lhs)}, {"rhs", rat(q.rhs)},
                         {"margin", rat(q.margin)}, {"holds", q.holds}});
    return {{"items", items},
            {"item4", {{"lhs", root_sum(kt.sum_root)}, {"rhs", root_sum(kt.roots_sum)}, {"comparison", comparison(kt.item4)}}},
            {"holds", kt.holds()}};
}

json equality_json(const EqualityReport& e) {
    return {{"equality", e.equality},
            {"ratio", e.ratio ? rat(*e.ratio) : json(nullptr)},
            {"ratio_power_matches", e.ratio_power_matches},
            {"cond1", e.cond1},
            {"cond2", e.cond2},
            {"cond3", e.cond3},
            {"cond4", e.cond4},
            {"cond4_margin", rat(e.cond4_margin)},
            {"cond5", to_string(e.cond5)},
            {"consistent", e.consistent()}};
}

json diskant_json(const DiskantReport& d) {
    return {{"lhs", root_sum(d.lhs)},         {"rhs", root_sum(d.rhs)},
            {"slope", rat(d.slope)},          {"bracket", comparison(d.bracket)},
            {"verdict", comparison(d.verdict)}, {"holds", d.holds()}};
}

json radii_json(const RadiiReport& r) {
    json chain = json::array();
    for (const auto& c : r.chain)
        chain.push_back({{"name", c.name}, {"exact", c.exact ? root_sum(*c.exact) : json(nullptr)}, {"enclosure", interval(c.enclosure)}});
    json links = json::array();
    for (bool l : r.links) links.push_back(l);
    return {{"chain", chain}, {"links", links}, {"inradius", rat(r.inradius)}, {"outradius", rat(r.outradius)}, {"holds", r.holds()}};
}

json pair_inputs(const LoadedModel& m, const Engine& e, const QVec& d1, const QVec& d2) {
    json in = {{"model", m.name()}, {"d1", vec(d1)}, {"d2", vec(d2)}, {"backend", e.backend->tag()}};
    if (e.mapped) in["surface_classes"] = {{"model", e.backend->model_name()}, {"d1", vec(e.d1)}, {"d2", vec(e.d2)}};
    return in;
}

json minkowski_sections(const MinkowskiReport& r) {
    return {{"s_sequence", s_sequence_json(r.s)}, {"kt", kt_json(r.kt)},
            {"equality", equality_json(r.equality)}, {"diskant", diskant_json(r.diskant)},
            {"radii", radii_json(r.radii)}, {"volume_of_sum", rat(r.volume_of_sum)}};
}

json surface_decomposition(const SurfaceModel& s, const QVec& d, bool& ok) {
    auto z = zariski_decompose(s, d);
    json neg = json::array();
    for (const auto& c : z.negative)
        neg.push_back({{"generator", c.generator}, {"label", s.generator_label(c.generator)},
                       {"class", vec(s.psef_generators()[c.generator])}, {"coefficient", rat(c.coefficient)}});
    // independent re-check of the defining properties
    ok = z.positive + z.negative_class(s) == d && is_nef(s, z.positive) &&
         (z.negative.empty() || is_negative_definite(z.support_gram));
    for (const auto& c : z.negative) ok = ok && s.intersect(z.positive, s.psef_generators()[c.generator]) == 0 && c.coefficient > 0;
    return {{"positive", vec(z.positive)}, {"negative", neg}, {"negative_class", vec(z.negative_class(s))},
            {"volume", rat(s.intersect(z.positive, z.positive))}, {"generator_pairings", rats(z.generator_pairings)},
            {"invariants_hold", ok}};
}

json toric_decomposition(const ToricModel& t, const QVec& d, bool& ok) {
    json sig = json::array();
    bool nonneg = true;
    for (std::size_t r = 0; r < t.num_rays(); ++r) {
        auto sv = sigma_toric(t, d, r);
        nonneg = nonneg && sv.value >= 0;
        sig.push_back({{"ray", r}, {"label", t.ray_label(r)}, {"sigma", rat(sv.value)}, {"minimizer", vec(sv.minimizer)}});
    }
    QVec p = p_sigma_toric(t, d);
    auto poly = divisor_polytope(t, d);
    json verts = json::array();
    for (const auto& v : poly.vertices()) verts.push_back(vec(v));
    ok = nonneg && divisor_polytope(t, p) == poly;
    return {{"sigma", sig}, {"positive", vec(p)}, {"negative_class", vec(d - p)}, {"polytope_vertices", verts},
            {"volume", rat(toric_volume(t, d))}, {"invariants_hold", ok}};
}

json decompose_one(const LoadedModel& m, const QVec& d, bool& ok) {
    return m.is_surface() ? surface_decomposition(m.surface(), d, ok) : toric_decomposition(m.toric(), d, ok);
}

std::pair<QVec, QVec> random_pair(const LoadedModel& m, Sampler& s) {
    if (m.is_surface()) return {random_big_surface(m.surface(), s), random_big_surface(m.surface(), s)};
    if (m.toric().dim() == 2 && m.surface_link) return {random_big_toric(m.toric(), s), random_big_toric(m.toric(), s)};
    return {random_nef_big_toric(m.toric(), s), random_nef_big_toric(m.toric(), s)};
}

ReportDocument base_report(const std::string& command, const LoadedModel& m) {
    ReportDocument r;
    r["metadata"] = {{"engine", "divcalc"},
                     {"version", kEngineVersion},
                     {"command", command},
                     {"model", m.name()},
                     {"model_hash", model_hash(m)},
                     {"slope_definition", kSlopeDefinitionNote},
                     {"scope_note", "positive products come from Zariski decompositions on surfaces and from mixed "
                                    "volumes of nef toric divisors; sigma-decompositions in dimension >= 3 are not used"}};
    return r;
}

ReportDocument cmd_decompose(const LoadedModel& m, const RunArgs& a, ReportDocument r) {
    if (a.count > 0) {
        Sampler s(a.seed);
        json cases = json::array();
        bool all = true;
        for (long i = 0; i < a.count; ++i) {
            QVec d = m.is_surface() ? random_psef_surface(m.surface(), s) : random_big_toric(m.toric(), s);
            bool ok = false;
            json c = decompose_one(m, d, ok);
            c["d"] = vec(d);
            cases.push_back(c);
            all = all && ok;
        }
        r["inputs"] = {{"model", m.name()}, {"seed", std::to_string(a.seed)}, {"count", a.count}};
        r["cases"] = cases;
        r["certified"] = all;
        return r;
    }
    const QVec& d = require(a.d, "--d", class_length(m));
    bool ok = false;
    r["inputs"] = {{"model", m.name()}, {"d", vec(d)}};
    r["decomposition"] = decompose_one(m, d, ok);
    r["certified"] = ok;
    return r;
}

ReportDocument cmd_volume(const LoadedModel& m, const RunArgs& a, ReportDocument r) {
    const QVec& d = require(a.d, "--d", class_length(m));
    r["inputs"] = {{"model", m.name()}, {"d", vec(d)}};
    if (m.is_surface()) {
        bool psef = is_pseudo_effective(m.surface(), d);
        r["volume"] = {{"value", rat(surface_volume(m.surface(), d))}, {"pseudo_effective", psef}};
    } else {
        r["volume"] = {{"value", rat(toric_volume(m.toric(), d))}};
    }
    r["certified"] = true;
    return r;
}

ReportDocument cmd_slope(const LoadedModel& m, const RunArgs& a, ReportDocument r) {
    const QVec& d1 = require(a.d1, "--d1", class_length(m));
    const QVec& d2 = require(a.d2, "--d2", class_length(m));
    r["inputs"] = {{"model", m.name()}, {"d1", vec(d1)}, {"d2", vec(d2)}};
    if (m.is_surface()) {
        const auto& s = m.surface();
        auto c = slope_surface(s, d1, d2);
        QVec p1 = zariski_decompose(s, d1).positive, p2 = zariski_decompose(s, d2).positive;
        bool ok = dot(c.functional, p1) == c.slope && dot(c.functional, p2) >= 1 &&
                  is_pseudo_effective(s, p1 - c.slope * p2);
        for (const auto& g : s.psef_generators()) ok = ok && dot(c.functional, g) >= 0;
        r["slope"] = {{"value", rat(c.slope)}, {"functional", vec(c.functional)}, {"certificate_holds", ok}};
        r["certified"] = ok;
    } else {
        r["slope"] = {{"value", rat(slope_toric(m.toric(), d1, d2))}};
        r["certified"] = true;
    }
    return r;
}

ReportDocument cmd_pair(const std::string& command, const LoadedModel& m, const RunArgs& a, ReportDocument r) {
    if (command == "minkowski-report" && a.count > 0) {
        Sampler s(a.seed);
        json cases = json::array();
        bool all = true;
        for (long i = 0; i < a.count; ++i) {
            auto [d1, d2] = random_pair(m, s);
            Engine e = pick_engine(m, d1, d2);
            auto mr = minkowski_report(*e.backend, e.d1, e.d2);
            json c = minkowski_sections(mr);
            c["inputs"] = pair_inputs(m, e, d1, d2);
            c["certified"] = mr.certified();
            cases.push_back(c);
            all = all && mr.certified();
        }
        r["inputs"] = {{"model", m.name()}, {"seed", std::to_string(a.seed)}, {"count", a.count}};
        r["cases"] = cases;
        r["certified"] = all;
        return r;
    }
    const QVec& d1 = require(a.d1, "--d1", class_length(m));
    const QVec& d2 = require(a.d2, "--d2", class_length(m));
    Engine e = pick_engine(m, d1, d2);
    r["inputs"] = pair_inputs(m, e, d1, d2);
    const Backend& b = *e.backend;
    if (command == "s-sequence") {
        r["s_sequence"] = s_sequence_json(s_sequence(b, e.d1, e.d2));
        r["certified"] = true;
    } else if (command == "diskant") {
        auto seq = s_sequence(b, e.d1, e.d2);
        auto dk = diskant_from(seq, b.slope(e.d1, e.d2));
        r["s_sequence"] = s_sequence_json(seq);
        r["diskant"] = diskant_json(dk);
        r["certified"] = dk.holds();
    } else if (command == "radii") {
        auto seq = s_sequence(b, e.d1, e.d2);
        auto rr = radii_from(seq, b.slope(e.d1, e.d2), b.slope(e.d2, e.d1));
        r["s_sequence"] = s_sequence_json(seq);
        r["radii"] = radii_json(rr);
        r["certified"] = rr.holds();
    } else {
        auto mr = minkowski_report(b, e.d1, e.d2);
        json sections = minkowski_sections(mr);
        for (auto& [k, v] : sections.items()) r[k] = v;
        r["slope"] = {{"value", rat(mr.slope)}};
        r["certified"] = mr.certified();
    }
    return r;
}

ReportDocument cmd_okounkov(const LoadedModel& m, const RunArgs& a, ReportDocument r) {
    if (m.is_surface()) throw Error("unsupported-model", "okounkov needs a toric model");
    const auto& t = m.toric();
    const QVec& d = require(a.d, "--d", t.num_rays());
    ToricFlag flag = a.flag ? make_flag(t, *a.flag) : default_flag(t);
    auto g = okounkov_volume_check(t, d, flag, a.m_max);
    json rays = json::array();
    for (auto ray : flag.ray_order) rays.push_back(ray);
    json levels = json::array();
    for (std::size_t i = 0; i < g.samples.size(); ++i) {
        const auto& s = g.samples[i];
        const auto& lv = g.levels[i];
        json pts = json::array();
        for (const auto& p : s.points) pts.push_back(vec(p));
        levels.push_back({{"m", s.m}, {"points", pts}, {"hull_volume", rat(s.hull_volume)},
                          {"scaled_hull_volume", rat(lv.scaled_hull_volume)}, {"bounded", lv.bounded},
                          {"integral", lv.integral}, {"equal", lv.equal}});
    }
    json cont = json::array();
    for (const auto& c : g.containment) cont.push_back({{"m", c.m}, {"km", c.km}, {"holds", c.holds}});
    json ok = {{"flag", {{"cone", flag.cone}, {"rays", rays}}},
               {"H", vec(g.h)},
               {"toric_volume", rat(g.toric_volume)},
               {"integral_level", g.integral_level},
               {"levels", levels},
               {"containment", cont},
               {"injective", g.injective},
               {"holds", g.holds()}};
    bool certified = g.holds();
    if (m.surface_link) {
        std::shared_ptr<LoadedModel> slot;
        const auto& s = linked_surface(m, slot);
        Rat sv = surface_volume(s.surface(), map_class(*m.surface_link, d));
        ok["surface_volume"] = rat(sv);
        ok["surface_volume_matches"] = sv == g.toric_volume;
        certified = certified && sv == g.toric_volume;
    }
    r["inputs"] = {{"model", m.name()}, {"d", vec(d)}, {"m_max", a.m_max}};
    r["okounkov"] = ok;
    r["certified"] = certified;
    return r;
}

ReportDocument cmd_bplus(const LoadedModel& m, const RunArgs& a, ReportDocument r) {
    if (!m.is_surface()) throw Error("unsupported-model", "bplus needs a surface model");
    const auto& s = m.surface();
    const QVec& d = require(a.d, "--d", s.rank());
    if (!is_big(s, d)) throw Error("not-big", "D " + to_string(d) + " is not big");
    auto b = augmented_base_divisorial(s, d);
    const Rat vol = surface_volume(s, d);
    json support = json::array(), samples = json::array(), growth = json::array();
    for (auto g : b.support) support.push_back({{"generator", g}, {"label", s.generator_label(g)}, {"class", vec(s.psef_generators()[g])}});
    for (const auto& smp : b.samples) {
        json neg = json::array();
        for (const auto& c : smp.negative) neg.push_back({{"generator", c.generator}, {"coefficient", rat(c.coefficient)}});
        samples.push_back({{"epsilon", rat(smp.epsilon)}, {"negative", neg}});
    }
    // Components of the locus leave the volume unchanged; other generators raise it.
    bool ok = true;
    for (std::size_t g = 0; g < s.psef_generators().size(); ++g) {
        bool in = std::find(b.support.begin(), b.support.end(), g) != b.support.end();
        Rat v = surface_volume(s, d + s.psef_generators()[g]);
        bool holds = in ? v == vol : v > vol;
        ok = ok && holds;
        growth.push_back({{"generator", g}, {"label", s.generator_label(g)}, {"in_locus", in},
                          {"volume_after", rat(v)}, {"holds", holds}});
    }
    r["inputs"] = {{"model", m.name()}, {"d", vec(d)}};
    r["bplus"] = {{"support", support}, {"samples", samples}, {"volume", rat(vol)}, {"volume_growth", growth}, {"holds", ok}};
    r["certified"] = ok;
    return r;
}

// ---- table rendering ---------------------------------------------------------

const char* mark(bool ok) { return ok ? "✓" : "✗"; }

std::string str(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    if (v.is_object() && v.contains("expr")) return v["expr"].get<std::string>();
    if (v.is_object() && v.contains("lo")) return "[" + str(v["lo"]) + ", " + str(v["hi"]) + "]";
    if (v.is_array()) {
        std::string out = "(";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + str(v[i]);
        return out + ")";
    }
    return v.dump();
}

void render_pair_sections(std::ostringstream& o, const json& r, const std::string& indent) {
    if (r.contains("s_sequence")) o << indent << "s-sequence        " << str(r["s_sequence"]["values"]) << "\n";
    if (r.contains("kt")) {
        const auto& kt = r["kt"];
        o << indent << "Khovanskii-Teissier " << mark(kt["holds"].get<bool>()) << "\n";
        for (const auto& q : kt["items"])
            o << indent << "  item " << q["item"].get<int>() << " i=" << q["index"].get<int>() << "  " << str(q["lhs"])
              << " >= " << str(q["rhs"]) << "  margin " << str(q["margin"]) << " " << mark(q["holds"].get<bool>()) << "\n";
        const auto& i4 = kt["item4"];
        o << indent << "  item 4  " << str(i4["lhs"]) << " vs " << str(i4["rhs"]) << "  " << str(i4["comparison"]["order"]) << "\n";
    }
    if (r.contains("equality")) {
        const auto& e = r["equality"];
        o << indent << "equality          " << (e["equality"].get<bool>() ? "proportional, ratio " + str(e["ratio"]) : std::string("not proportional"))
          << "  cond4 margin " << str(e["cond4_margin"]) << "  cond5 " << str(e["cond5"]) << " "
          << mark(e["consistent"].get<bool>()) << "\n";
    }
    if (r.contains("diskant")) {
        const auto& d = r["diskant"];
        o << indent << "Diskant           " << str(d["lhs"]) << " vs " << str(d["rhs"]) << "  (s = " << str(d["slope"]) << ")  "
          << str(d["verdict"]["order"]) << " " << mark(d["holds"].get<bool>()) << "\n";
    }
    if (r.contains("radii")) {
        const auto& rr = r["radii"];
        o << indent << "radii chain       ";
        const auto& chain = rr["chain"];
        for (std::size_t i = 0; i < chain.size(); ++i) {
            const auto& c = chain[i];
            o << (c["exact"].is_null() ? str(c["enclosure"]) : str(c["exact"]));
            if (i + 1 < chain.size()) o << " <=" << mark(rr["links"][i].get<bool>()) << " ";
        }
        o << "\n";
    }
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"decompose", "volume",  "slope",    "s-sequence", "minkowski-report",
                                                   "diskant",   "radii",   "okounkov", "bplus"};
    return names;
}

ReportDocument run_command(const std::string& command, const LoadedModel& model, const RunArgs& args) {
    ReportDocument r = base_report(command, model);
    if (command == "decompose") return cmd_decompose(model, args, std::move(r));
    if (command == "volume") return cmd_volume(model, args, std::move(r));
    if (command == "slope") return cmd_slope(model, args, std::move(r));
    if (command == "s-sequence" || command == "minkowski-report" || command == "diskant" || command == "radii")
        return cmd_pair(command, model, args, std::move(r));
    if (command == "okounkov") return cmd_okounkov(model, args, std::move(r));
    if (command == "bplus") return cmd_bplus(model, args, std::move(r));
    throw Error("unknown-command", "unknown command " + command);
}

std::string render_report(const ReportDocument& r, Format format) {
    if (format == Format::json) return r.dump(2) + "\n";
    std::ostringstream o;
    if (r.contains("error")) {
        o << "error [" << str(r["error"]["code"]) << "] " << str(r["error"]["message"]) << "\n";
        return o.str();
    }
    const auto& meta = r["metadata"];
    o << str(meta["command"]) << " on " << str(meta["model"]) << "  (divcalc " << str(meta["version"]) << ")\n";
    for (const auto& [k, v] : r["inputs"].items())
        if (k != "model") o << "  " << k << ": " << str(v) << "\n";
    if (r.contains("decomposition")) {
        const auto& d = r["decomposition"];
        o << "  positive part     " << str(d["positive"]) << "\n";
        if (d.contains("negative"))
            for (const auto& c : d["negative"]) o << "  negative          " << str(c["coefficient"]) << " * " << str(c["label"]) << "\n";
        if (d.contains("sigma"))
            for (const auto& c : d["sigma"]) o << "  sigma " << str(c["label"]) << "  " << str(c["sigma"]) << "\n";
        o << "  volume            " << str(d["volume"]) << "  " << mark(d["invariants_hold"].get<bool>()) << "\n";
    }
    if (r.contains("volume")) o << "  volume            " << str(r["volume"]["value"]) << "\n";
    if (r.contains("slope")) o << "  slope             " << str(r["slope"]["value"]) << "\n";
    render_pair_sections(o, r, "  ");
    if (r.contains("okounkov")) {
        const auto& ok = r["okounkov"];
        o << "  H                 " << str(ok["H"]) << "   toric volume " << str(ok["toric_volume"]) << "\n";
        o << "  level  points  d!*hull volume\n";
        for (const auto& lv : ok["levels"])
            o << "  " << lv["m"].get<long>() << "      " << lv["points"].size() << "       " << str(lv["scaled_hull_volume"])
              << (lv["integral"].get<bool>() ? (std::string("  integral ") + mark(lv["equal"].get<bool>())) : std::string()) << "\n";
        bool mono = true;
        for (const auto& c : ok["containment"]) mono = mono && c["holds"].get<bool>();
        o << "  sub-hull monotonicity " << mark(mono) << "  injective " << mark(ok["injective"].get<bool>()) << "\n";
    }
    if (r.contains("bplus")) {
        const auto& b = r["bplus"];
        o << "  B+ divisorial     {";
        for (std::size_t i = 0; i < b["support"].size(); ++i) o << (i ? ", " : "") << str(b["support"][i]["label"]);
        o << "}  volume " << str(b["volume"]) << "\n";
        for (const auto& g : b["volume_growth"])
            o << "  vol(D + " << str(g["label"]) << ") = " << str(g["volume_after"]) << " " << mark(g["holds"].get<bool>()) << "\n";
    }
    if (r.contains("cases")) {
        std::size_t good = 0;
        for (const auto& c : r["cases"]) {
            bool ok = c.contains("certified") ? c["certified"].get<bool>() : c["invariants_hold"].get<bool>();
            good += ok;
        }
        o << "  cases             " << good << "/" << r["cases"].size() << " certified\n";
    }
    o << "certified " << mark(r["certified"].get<bool>()) << "\n";
    return o.str();
}

ReportDocument parse_report(std::string_view text) {
    json r;
    try {
        r = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error("parse-error", std::string("invalid report JSON: ") + e.what());
    }
    if (!r.is_object()) throw Error("report-shape", "a report is a JSON object");
    if (r.contains("error")) return r;
    for (const char* key : {"metadata", "inputs", "certified"})
        if (!r.contains(key)) throw Error("report-shape", std::string("report is missing \"") + key + "\"");
    if (!r["certified"].is_boolean()) throw Error("report-shape", "\"certified\" must be a boolean");
    for (const char* key : {"engine", "version", "command", "model_hash", "slope_definition"})
        if (!r["metadata"].contains(key)) throw Error("report-shape", std::string("metadata is missing \"") + key + "\"");
    return r;
}

ReportDocument error_report(const Error& e) {
    json issues = json::array();
    if (auto* v = dynamic_cast<const ValidationError*>(&e))
        for (const auto& i : v->issues()) issues.push_back({{"code", i.code}, {"message", i.message}});
    return {{"error", {{"code", e.code()}, {"message", e.what()}, {"issues", issues}}}};
}

}  // namespace divcalc
