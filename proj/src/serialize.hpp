#pragma once

#include <string>

#include "assignment.hpp"
#include "extract.hpp"
#include "graph.hpp"
#include "solvers.hpp"

namespace igp {

/// Assignment JSON: { "K": int, "S": int, "rooms": { "<node_id>": room } }
/// with 1-based room indices. Object keys sort lexicographically, so output
/// is byte-stable for equal inputs.
std::string assignment_to_json(const Assignment& a);
Assignment assignment_from_json(const std::string& text);
Assignment assignment_from_json_file(const std::string& path);

std::string objective_to_json(const ObjectiveReport& rep);
std::string stats_to_json(const GraphStats& s);
std::string violations_to_json(const std::vector<Violation>& violations);
std::string moves_to_json(const std::vector<MoveRecord>& log);
std::string curve_to_csv(const std::vector<CurvePoint>& points);

/// Everything cmd-eval reports: objective (lenient when violations exist),
/// per-room counts, network statistics, and the violation list.
std::string eval_report_json(const Graph& g, const Assignment& a, std::size_t* violation_count);

/// Extraction report: provenance, warnings, and per-network statistics with
/// per-kind edge counts.
std::string extract_report_json(const NetworkBundle& bundle,
                                const std::vector<ParseWarning>& warnings);

}  // namespace igp
