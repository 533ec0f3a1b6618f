#pragma once

#include <json.hpp>

#include <string>

namespace pfzero::cli {

/// Deterministic JSON text: keys sorted, two-space indent, floats printed with
/// 17 significant digits ("%.17g"), non-finite floats as null.
std::string dump_canonical(const nlohmann::json& j);

} // namespace pfzero::cli
