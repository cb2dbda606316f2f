#pragma once

#include <indtree/enumerator.hpp>
#include <indtree/solver.hpp>
#include <indtree/verifier.hpp>

#include <string>

namespace indtree {

/// Version of the JSON report layout, emitted as "schema".
inline constexpr int report_schema_version = 1;

/// With timing off, "elapsed" is null and output is identical across runs.
auto to_json(const EnumerationReport & report, bool timing = true) -> std::string;
auto to_json(const VerificationReport & report, bool timing = true) -> std::string;
auto to_json(const Graph & g, const TreeSearchResult & result) -> std::string;

auto to_text(const EnumerationReport & report, bool timing = true) -> std::string;
auto to_text(const VerificationReport & report, bool timing = true) -> std::string;

/// "{0, 2, 5}"
auto format_vertex_list(VertexSet s) -> std::string;

} // namespace indtree
