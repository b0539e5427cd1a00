#pragma once

#include "arrtop/arrangement.hpp"

#include <json.hpp>
#include <string>
#include <string_view>

namespace arrtop {

/// Arrangement file format:
///   {"ambient_dim": N, "field": "Q" | "Q(i)",
///    "planes": [{"label": "...", "equations": [[a_1, ..., a_N, b], ...]}, ...]}
/// Each row means a·x = b.  Coefficients are integers or exact strings
/// ("3/4", "1-2i"); Q(i) entries may also be {"re": ..., "im": ...}.
Arrangement parse_document(std::string_view text);
Arrangement load_document(const std::string& path);
nlohmann::json document_json(const Arrangement& arr);
std::string serialize_document(const Arrangement& arr);

}  // namespace arrtop
