#pragma once

#include <string>
#include <vector>

namespace divcalc {

/// Names of the built-in model documents ("F1.json", "F1-toric.json", ...).
std::vector<std::string> catalog_names();

/// Text of a built-in document; the ".json" suffix is optional. Throws
/// "unknown-model".
const std::string& catalog_document(const std::string& name);

/// Resolves a model argument: an existing file path, then a file in the
/// directory named by DIVCALC_CATALOG, then a built-in name.
std::string load_model_text(const std::string& spec);

}  // namespace divcalc
