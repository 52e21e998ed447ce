#pragma once

#include <string>

#include "graph.hpp"

namespace igp {

/// Edge-list text format: one `id1<TAB>id2` edge per line, isolated nodes
/// as `node<TAB>id`, `#` starts a comment line. UTF-8 throughout.
Graph read_edgelist(const std::string& text);
Graph read_edgelist_file(const std::string& path);

/// Deterministic writer: edges sorted lexicographically (endpoints ordered
/// within each edge), then isolated nodes. Rejects ids the format cannot
/// carry (empty, "node", leading '#', embedded tab or newline).
std::string write_edgelist(const Graph& g);
void write_edgelist_file(const Graph& g, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace igp
