#include "divcalc/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "divcalc/error.hpp"

namespace divcalc {

namespace {

// Toric entries may carry a "surface_link": the surface model with the same
// Néron–Severi group and the class of each torus-invariant divisor D_ρ.
const std::map<std::string, std::string>& documents() {
    static const std::map<std::string, std::string> docs = {
        {"P2.json", R"({"model": {"kind": "surface", "name": "P2", "rank": 1,
  "gram": [[1]],
  "psef_generators": [["1"]],
  "ample": ["1"],
  "labels": ["H"]}}
)"},
        {"F0.json", R"({"model": {"kind": "surface", "name": "F0", "rank": 2,
  "gram": [[0, 1], [1, 0]],
  "psef_generators": [["1", "0"], ["0", "1"]],
  "ample": ["1", "1"],
  "labels": ["f", "g"]}}
)"},
        {"F1.json", R"({"model": {"kind": "surface", "name": "F1", "rank": 2,
  "gram": [[1, 0], [0, -1]],
  "psef_generators": [["0", "1"], ["1", "-1"]],
  "ample": ["2", "-1"],
  "labels": ["H", "E"]}}
)"},
        {"F2.json", R"({"model": {"kind": "surface", "name": "F2", "rank": 2,
  "gram": [[-2, 1], [1, 0]],
  "psef_generators": [["1", "0"], ["0", "1"]],
  "ample": ["1", "3"],
  "labels": ["C", "f"]}}
)"},
        {"dP6.json", R"({"model": {"kind": "surface", "name": "dP6", "rank": 4,
  "gram": [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]],
  "psef_generators": [["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"],
                      ["1", "-1", "-1", "0"], ["1", "-1", "0", "-1"], ["1", "0", "-1", "-1"]],
  "ample": ["3", "-1", "-1", "-1"],
  "labels": ["H", "E1", "E2", "E3"]}}
)"},
        {"P2-toric.json", R"({"model": {"kind": "toric", "name": "P2-toric", "dim": 2,
  "rays": [[1, 0], [0, 1], [-1, -1]],
  "max_cones": [[0, 1], [1, 2], [2, 0]],
  "labels": ["D1", "D2", "D3"],
  "surface_link": {"model": "P2.json", "class_map": [["1"], ["1"], ["1"]]}}}
)"},
        {"F0-toric.json", R"({"model": {"kind": "toric", "name": "F0-toric", "dim": 2,
  "rays": [[1, 0], [0, 1], [-1, 0], [0, -1]],
  "max_cones": [[0, 1], [1, 2], [2, 3], [3, 0]],
  "labels": ["D1", "D2", "D3", "D4"],
  "surface_link": {"model": "F0.json", "class_map": [["1", "0"], ["0", "1"], ["1", "0"], ["0", "1"]]}}}
)"},
        {"F1-toric.json", R"({"model": {"kind": "toric", "name": "F1-toric", "dim": 2,
  "rays": [[1, 0], [0, 1], [-1, 1], [0, -1]],
  "max_cones": [[0, 1], [1, 2], [2, 3], [3, 0]],
  "labels": ["D1", "D2", "D3", "D4"],
  "surface_link": {"model": "F1.json", "class_map": [["1", "-1"], ["0", "1"], ["1", "-1"], ["1", "0"]]}}}
)"},
        {"F2-toric.json", R"({"model": {"kind": "toric", "name": "F2-toric", "dim": 2,
  "rays": [[1, 0], [0, 1], [-1, 2], [0, -1]],
  "max_cones": [[0, 1], [1, 2], [2, 3], [3, 0]],
  "labels": ["D1", "D2", "D3", "D4"],
  "surface_link": {"model": "F2.json", "class_map": [["0", "1"], ["1", "0"], ["0", "1"], ["1", "2"]]}}}
)"},
        {"dP6-toric.json", R"({"model": {"kind": "toric", "name": "dP6-toric", "dim": 2,
  "rays": [[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]],
  "max_cones": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 0]],
  "labels": ["D1", "D2", "D3", "D4", "D5", "D6"],
  "surface_link": {"model": "dP6.json", "class_map": [["1", "-1", "0", "-1"], ["0", "1", "0", "0"],
                                                      ["1", "-1", "-1", "0"], ["0", "0", "1", "0"],
                                                      ["1", "0", "-1", "-1"], ["0", "0", "0", "1"]]}}}
)"},
        {"P1xP1xP1-toric.json", R"({"model": {"kind": "toric", "name": "P1xP1xP1-toric", "dim": 3,
  "rays": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, 0, 0], [0, -1, 0], [0, 0, -1]],
  "max_cones": [[0, 1, 2], [0, 1, 5], [0, 4, 2], [0, 4, 5], [3, 1, 2], [3, 1, 5], [3, 4, 2], [3, 4, 5]],
  "labels": ["X1", "Y1", "Z1", "X2", "Y2", "Z2"]}}
)"},
        {"P3-toric.json", R"({"model": {"kind": "toric", "name": "P3-toric", "dim": 3,
  "rays": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]],
  "max_cones": [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]],
  "labels": ["D1", "D2", "D3", "D4"]}}
)"},
    };
    return docs;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error("io-error", "cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : documents()) out.push_back(name);
    return out;
}

const std::string& catalog_document(const std::string& name) {
    const auto& docs = documents();
    auto it = docs.find(name);
    if (it == docs.end()) it = docs.find(name + ".json");
    if (it == docs.end()) throw Error("unknown-model", "no such model file or built-in catalog entry: " + name);
    return it->second;
}

std::string load_model_text(const std::string& spec) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (fs::is_regular_file(spec, ec)) return read_file(spec);
    if (const char* dir = std::getenv("DIVCALC_CATALOG"); dir && *dir) {
        for (const std::string& candidate : {spec, spec + ".json"}) {
            fs::path p = fs::path(dir) / candidate;
            if (fs::is_regular_file(p, ec)) return read_file(p);
        }
    }
    return catalog_document(spec);
}

}  // namespace divcalc
