#pragma once

#include "torvex/algebra.hpp"

#include <string>

namespace torvex {

// Deterministic JSON serialization: {"suite", "checked", "passed",
// "violations": [{"identity", "witness"}...]}. Scalars elsewhere in the tool
// are always exact "p/q" strings; reports carry no numerics beyond counts.
std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);

std::string report_to_text(const Report& r);

} // namespace torvex
