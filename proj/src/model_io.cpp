#include "divcalc/model_io.hpp"

#include <cstdio>

#include "divcalc/catalog.hpp"

namespace divcalc {

using nlohmann::json;

const std::string& LoadedModel::name() const { return is_surface() ? surface().name() : toric().name(); }

Rat rational_from_json(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Rat(Int(std::to_string(v.get<std::uint64_t>())));
        return Rat(Int(std::to_string(v.get<std::int64_t>())));
    }
    if (v.is_number_float())
        throw Error("rational-encoding", "floating-point literal " + v.dump() + "; write rationals as \"p/q\" strings");
    throw Error("parse-error", "expected a rational, got " + v.dump());
}

json rational_to_json(const Rat& r) { return to_string(r); }

QVec qvec_from_json(const json& v) {
    if (!v.is_array()) throw Error("parse-error", "expected an array of rationals, got " + v.dump());
    QVec out;
    for (const auto& x : v) out.push_back(rational_from_json(x));
    return out;
}

json qvec_to_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

namespace {

Int integer_from_json(const json& v, const char* what) {
    Rat r = rational_from_json(v);
    if (r.get_den() != 1) throw Error("parse-error", std::string(what) + " must be an integer, got " + to_string(r));
    return r.get_num();
}

const json& field(const json& obj, const char* key, std::vector<Issue>& issues) {
    static const json null_value;
    auto it = obj.find(key);
    if (it == obj.end()) {
        issues.push_back({"missing-field", std::string("model is missing \"") + key + "\""});
        return null_value;
    }
    return *it;
}

std::vector<std::string> labels_from_json(const json& obj) {
    std::vector<std::string> out;
    auto it = obj.find("labels");
    if (it == obj.end() || it->is_null()) return out;
    if (!it->is_array()) throw Error("parse-error", "\"labels\" must be an array of strings");
    for (const auto& l : *it) {
        if (!l.is_string()) throw Error("parse-error", "\"labels\" must be an array of strings");
        out.push_back(l.get<std::string>());
    }
    return out;
}

LoadedModel parse_surface(const json& m) {
    std::vector<Issue> issues;
    SurfaceData data;
    data.name = m.value("name", std::string("surface"));
    const json& rank = field(m, "rank", issues);
    const json& gram = field(m, "gram", issues);
    const json& gens = field(m, "psef_generators", issues);
    const json& ample = field(m, "ample", issues);
    if (!issues.empty()) throw ValidationError(issues);
    if (!gram.is_array() || !gens.is_array()) throw Error("parse-error", "\"gram\" and \"psef_generators\" must be arrays");

    const std::size_t n = gram.size();
    std::size_t width = n;
    for (const auto& row : gram) {
        if (!row.is_array()) throw Error("parse-error", "\"gram\" rows must be arrays");
        width = std::max(width, row.size());
    }
    data.gram = QMatrix(n, width);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < gram[i].size(); ++j) data.gram(i, j) = rational_from_json(gram[i][j]);
    bool ragged = false;
    for (const auto& row : gram) ragged |= row.size() != width;
    for (const auto& g : gens) data.psef_generators.push_back(qvec_from_json(g));
    data.ample = qvec_from_json(ample);
    data.labels = labels_from_json(m);

    if (ragged) issues.push_back({"gram-shape", "gram rows have different lengths"});
    Int r = integer_from_json(rank, "rank");
    if (r != Int(static_cast<long>(n))) issues.push_back({"rank", "rank " + r.get_str() + " does not match the gram size " + std::to_string(n)});
    if (!ragged) {
        auto more = SurfaceModel::validate(data);
        issues.insert(issues.end(), more.begin(), more.end());
    }
    if (!issues.empty()) throw ValidationError(issues);
    return LoadedModel{SurfaceModel(std::move(data)), std::nullopt};
}

LoadedModel parse_toric(const json& m) {
    std::vector<Issue> issues;
    ToricData data;
    data.name = m.value("name", std::string("toric"));
    const json& dim = field(m, "dim", issues);
    const json& rays = field(m, "rays", issues);
    const json& cones = field(m, "max_cones", issues);
    if (!issues.empty()) throw ValidationError(issues);
    if (!rays.is_array() || !cones.is_array()) throw Error("parse-error", "\"rays\" and \"max_cones\" must be arrays");

    Int d = integer_from_json(dim, "dim");
    if (d < 1 || d > 4) throw ValidationError(std::vector<Issue>{{"dimension", "dim must be between 1 and 4"}});
    data.dim = d.get_ui();
    for (const auto& ray : rays) {
        if (!ray.is_array()) throw Error("parse-error", "each ray must be an array of integers");
        IntVec v;
        for (const auto& x : ray) v.push_back(integer_from_json(x, "ray coordinate"));
        data.rays.push_back(std::move(v));
    }
    for (const auto& cone : cones) {
        if (!cone.is_array()) throw Error("parse-error", "each maximal cone must be an array of ray indices");
        std::vector<std::size_t> c;
        for (const auto& x : cone) {
            Int i = integer_from_json(x, "ray index");
            if (i < 0) throw ValidationError(std::vector<Issue>{{"cone-index", "negative ray index in a maximal cone"}});
            c.push_back(i.get_ui());
        }
        data.max_cones.push_back(std::move(c));
    }
    data.labels = labels_from_json(m);
    issues = ToricModel::validate(data);

    std::optional<SurfaceLink> link;
    if (auto it = m.find("surface_link"); it != m.end()) {
        SurfaceLink l;
        l.model = it->value("model", std::string());
        for (const auto& c : it->value("class_map", json::array())) l.class_map.push_back(qvec_from_json(c));
        if (l.class_map.size() != data.rays.size())
            issues.push_back({"surface-link", "class_map needs one class per ray"});
        link = std::move(l);
    }
    if (!issues.empty()) throw ValidationError(issues);
    return LoadedModel{ToricModel(std::move(data)), std::move(link)};
}

}  // namespace

LoadedModel parse_model(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error("parse-error", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("model") || !doc["model"].is_object())
        throw Error("parse-error", "document must be an object with a \"model\" object");
    const json& m = doc["model"];
    const std::string kind = m.value("kind", std::string());
    try {
        if (kind == "surface") return parse_surface(m);
        if (kind == "toric") return parse_toric(m);
    } catch (const json::exception& e) {
        throw Error("parse-error", std::string("malformed model: ") + e.what());
    }
    throw Error("parse-error", "model \"kind\" must be \"surface\" or \"toric\"");
}

LoadedModel load_model(const std::string& spec) { return parse_model(load_model_text(spec)); }

json model_to_json(const LoadedModel& lm) {
    json m;
    if (lm.is_surface()) {
        const auto& s = lm.surface();
        m["kind"] = "surface";
        m["name"] = s.name();
        m["rank"] = s.rank();
        json gram = json::array();
        for (std::size_t i = 0; i < s.rank(); ++i) gram.push_back(qvec_to_json(s.gram().row(i)));
        m["gram"] = gram;
        json gens = json::array();
        for (const auto& g : s.psef_generators()) gens.push_back(qvec_to_json(g));
        m["psef_generators"] = gens;
        m["ample"] = qvec_to_json(s.ample());
        m["labels"] = s.labels();
    } else {
        const auto& t = lm.toric();
        m["kind"] = "toric";
        m["name"] = t.name();
        m["dim"] = t.dim();
        json rays = json::array();
        for (const auto& r : t.rays()) {
            json ray = json::array();
            for (const auto& x : r) ray.push_back(x.get_str());
            rays.push_back(ray);
        }
        m["rays"] = rays;
        m["max_cones"] = t.max_cones();
        m["labels"] = t.labels();
        if (lm.surface_link) {
            json cm = json::array();
            for (const auto& c : lm.surface_link->class_map) cm.push_back(qvec_to_json(c));
            m["surface_link"] = {{"model", lm.surface_link->model}, {"class_map", cm}};
        }
    }
    return json{{"model", m}};
}

std::string canonical_model_text(const LoadedModel& m) { return model_to_json(m).dump(); }

std::string model_hash(const LoadedModel& m) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : canonical_model_text(m)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

QVec parse_divisor(std::string_view csv, std::size_t expected_length) {
    QVec v = parse_qvec(csv);
    if (v.size() != expected_length)
        throw Error("dimension-mismatch", "divisor \"" + std::string(csv) + "\" has " + std::to_string(v.size()) +
                                              " entries; the model expects " + std::to_string(expected_length));
    return v;
}

}  // namespace divcalc
