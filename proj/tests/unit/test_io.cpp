#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>

#include "doctest.h"
#include "divcalc/catalog.hpp"
#include "divcalc/model_io.hpp"
#include "divcalc/report.hpp"

using namespace divcalc;

namespace {

QVec v(std::initializer_list<long> xs) { return QVec::from_ints(std::vector<long>(xs)); }

std::string error_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

bool has_issue(const std::string& text, const std::string& code) {
    try {
        parse_model(text);
    } catch (const ValidationError& e) {
        for (const auto& i : e.issues())
            if (i.code == code) return true;
    }
    return false;
}

const char* kSurface = R"({"model": {"kind": "surface", "name": "S", "rank": 2,
  "gram": %GRAM%, "psef_generators": [["0", "1"], ["1", "-1"]], "ample": ["2", "-1"]}})";

std::string surface_doc(const std::string& gram) {
    std::string s = kSurface;
    s.replace(s.find("%GRAM%"), 6, gram);
    return s;
}

}  // namespace

TEST_CASE("model documents parse and validate") {
    auto m = parse_model(catalog_document("F1.json"));
    REQUIRE(m.is_surface());
    CHECK(m.surface().rank() == 2);
    CHECK(m.name() == "F1");
    CHECK(parse_model(surface_doc(R"([["1", "0"], ["0", "-1"]])")).surface().rank() == 2);

    CHECK(error_code([] { parse_model("{"); }) == "parse-error");
    CHECK(error_code([] { parse_model(surface_doc("[[0.5, 0], [0, -1]]")); }) == "rational-encoding");
    CHECK(has_issue(surface_doc("[[1, 0], [0, 1]]"), "hodge-index"));
    CHECK(has_issue(surface_doc("[[1, 0, 0], [0, -1, 0], [0, 0, 1]]"), "rank"));
    CHECK(has_issue(surface_doc("[[1, 0], [0]]"), "gram-shape"));
    CHECK(has_issue(R"({"model": {"kind": "surface", "name": "S", "rank": 1, "gram": [[1]]}})", "missing-field"));

    const char* singular = R"({"model": {"kind": "toric", "name": "T", "dim": 2,
      "rays": [[1, 0], [1, 2], [-1, -1]], "max_cones": [[0, 1], [1, 2], [2, 0]]}})";
    CHECK(has_issue(singular, "smoothness"));

    const char* bad_link = R"({"model": {"kind": "toric", "name": "T", "dim": 2,
      "rays": [[1, 0], [0, 1], [-1, -1]], "max_cones": [[0, 1], [1, 2], [2, 0]],
      "surface_link": {"model": "P2.json", "class_map": [["1"], ["1"]]}}})";
    CHECK(has_issue(bad_link, "surface-link"));
}

TEST_CASE("every built-in model round-trips through its canonical text") {
    std::set<std::string> hashes;
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        auto m = load_model(name);
        auto text = canonical_model_text(m);
        auto again = parse_model(text);
        CHECK(canonical_model_text(again) == text);
        auto h = model_hash(m);
        CHECK(h.size() == 16);
        CHECK(h.find_first_not_of("0123456789abcdef") == std::string::npos);
        CHECK(model_hash(again) == h);
        hashes.insert(h);
    }
    CHECK(hashes.size() == catalog_names().size());
    CHECK(error_code([] { catalog_document("nope"); }) == "unknown-model");
    CHECK(catalog_document("F0") == catalog_document("F0.json"));
}

TEST_CASE("catalog directory override") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "divcalc-catalog-test";
    fs::create_directories(dir);
    {
        std::ofstream f(dir / "Mine.json");
        f << surface_doc(R"([[1, 0], [0, -1]])");
    }
    ::setenv("DIVCALC_CATALOG", dir.c_str(), 1);
    CHECK(load_model("Mine.json").name() == "S");
    CHECK(load_model("F1").name() == "F1");
    ::unsetenv("DIVCALC_CATALOG");
    CHECK(load_model((dir / "Mine.json").string()).name() == "S");
    fs::remove_all(dir);
}

TEST_CASE("rationals and divisor arguments") {
    CHECK(rational_from_json(nlohmann::json("3/6")) == make_rat(1, 2));
    CHECK(rational_from_json(nlohmann::json(-4)) == -4);
    CHECK(error_code([] { rational_from_json(nlohmann::json(0.5)); }) == "rational-encoding");
    CHECK(rational_to_json(make_rat(-2, 4)) == nlohmann::json("-1/2"));
    CHECK(qvec_from_json(qvec_to_json(v({1, -2, 0}))) == v({1, -2, 0}));

    CHECK(parse_divisor("1,-2,1/2", 3) == QVec{Rat(1), Rat(-2), make_rat(1, 2)});
    CHECK(error_code([] { parse_divisor("1,2", 3); }) == "dimension-mismatch");
    CHECK(error_code([] { parse_divisor("1,0.5", 2); }) == "rational-encoding");
}

TEST_CASE("reports are deterministic and parse back") {
    auto f0 = load_model("F0.json");
    RunArgs a;
    a.d1 = v({1, 2});
    a.d2 = v({2, 1});
    auto r = run_command("minkowski-report", f0, a);
    auto text = render_report(r, Format::json);
    CHECK(text == render_report(run_command("minkowski-report", f0, a), Format::json));
    CHECK(parse_report(text) == r);
    CHECK(r["certified"].get<bool>());
    CHECK(r["metadata"]["model_hash"] == model_hash(f0));
    CHECK(r["metadata"]["version"] == kEngineVersion);
    CHECK(text.find("\"1/2\"") != std::string::npos);

    auto table = render_report(r, Format::table);
    CHECK(table.find("✓") != std::string::npos);
    CHECK(table.find("✗") == std::string::npos);

    CHECK(error_code([] { parse_report("{}"); }) == "report-shape");
    CHECK(error_code([] { parse_report("not json"); }) != "");
    auto err = error_report(Error("not-big", "D2 is not big"));
    CHECK(err["error"]["code"] == "not-big");
}

TEST_CASE("every command runs on a surface and a toric model") {
    auto f1 = load_model("F1.json");
    auto f1t = load_model("F1-toric.json");
    RunArgs s;
    s.d = v({2, 1});
    s.d1 = v({2, 1});
    s.d2 = v({1, 0});
    RunArgs t;
    t.d = v({0, 1, 0, 1});
    t.d1 = v({1, 0, 0, 1});
    t.d2 = v({0, 1, 0, 1});
    t.m_max = 6;
    for (const auto& cmd : command_names()) {
        CAPTURE(cmd);
        if (cmd != "okounkov") {
            auto r = run_command(cmd, f1, s);
            CHECK(r["certified"].get<bool>());
            CHECK(parse_report(render_report(r, Format::json)) == r);
        }
        if (cmd != "bplus") {
            auto r = run_command(cmd, f1t, t);
            CHECK(r["certified"].get<bool>());
        }
    }
    CHECK(error_code([&] { run_command("okounkov", f1, s); }) != "");
    CHECK(error_code([&] { run_command("nonsense", f1, s); }) != "");
    RunArgs missing;
    CHECK(error_code([&] { run_command("volume", f1, missing); }) != "");
}

TEST_CASE("seeded batches repeat exactly") {
    auto m = load_model("dP6.json");
    RunArgs a;
    a.count = 5;
    a.seed = 7;
    auto first = render_report(run_command("minkowski-report", m, a), Format::json);
    CHECK(first == render_report(run_command("minkowski-report", m, a), Format::json));
    a.seed = 8;
    CHECK(first != render_report(run_command("minkowski-report", m, a), Format::json));
}

TEST_CASE("every built-in surface passes the randomized pair suite") {
    for (const char* name : {"P2", "F0", "F1", "F2", "dP6"}) {
        CAPTURE(name);
        auto m = load_model(name);
        RunArgs a;
        a.count = 40;
        auto r = run_command("minkowski-report", m, a);
        CHECK(r["cases"].size() == 40);
        CHECK(r["certified"].get<bool>());
        CHECK(run_command("decompose", m, a)["certified"].get<bool>());
    }
}
