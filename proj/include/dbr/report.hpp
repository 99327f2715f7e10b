#ifndef DBR_REPORT_HPP
#define DBR_REPORT_HPP

#include <string>

#include <json.hpp>

#include "dbr/characterize.hpp"
#include "dbr/graph.hpp"

namespace dbr {

extern const char* kVersion;

/// Full analysis: graph summary, spectrum, route verdicts, classification,
/// bipartite diagnostics when applicable.
nlohmann::json analyze_report(const Graph& g, double tol);

/// Classification plus the graph summary.
nlohmann::json classify_report(const Graph& g, double tol);

/// Per-vertex excesses and the predistance / predicted excess values.
nlohmann::json excess_command_report(const Graph& g, double tol);

/// Halved graphs, fitted walk-count scalars and the halved-graph route.
nlohmann::json halved_command_report(const Graph& g, double tol);

nlohmann::json verdict_json(const Verdict& v);

/// All floating values rounded to 12 significant digits, recursively.
void round_floats(nlohmann::json& j);

std::string render_text(const nlohmann::json& report);

}  // namespace dbr

#endif  // DBR_REPORT_HPP
