#include "edgelist.hpp"

#include <fstream>
#include <sstream>

namespace igp {

namespace {

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

bool comment(const std::string& line) {
    auto pos = line.find_first_not_of(" \t");
    return pos != std::string::npos && line[pos] == '#';
}

void check_writable_id(const NodeId& id) {
    if (id.empty() || id == "node" || id.front() == '#' ||
        id.find_first_of("\t\n\r") != std::string::npos)
        throw Error(ErrorCode::Validation,
                    "node id '" + id + "' cannot be represented in the edge-list format");
}

}  // namespace

Graph read_edgelist(const std::string& text) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<NodeId> isolated;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (blank(line) || comment(line)) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
            throw Error(ErrorCode::Parse,
                        "line " + std::to_string(lineno) + ": expected exactly two tab-separated fields");
        std::string a = line.substr(0, tab);
        std::string b = line.substr(tab + 1);
        if (a.empty() || b.empty())
            throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": empty field");
        if (a == "node")
            isolated.push_back(b);
        else
            edges.emplace_back(a, b);
    }
    return Graph::from_edges(edges, isolated);
}

Graph read_edgelist_file(const std::string& path) {
    return read_edgelist(read_text_file(path));
}

std::string write_edgelist(const Graph& g) {
    for (const auto& id : g.ids()) check_writable_id(id);
    std::string out;
    for (int u = 0; u < g.node_count(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            out += g.id_of(u);
            out += '\t';
            out += g.id_of(v);
            out += '\n';
        }
    }
    for (int u = 0; u < g.node_count(); ++u) {
        if (g.degree(u) == 0) {
            out += "node\t";
            out += g.id_of(u);
            out += '\n';
        }
    }
    return out;
}

void write_edgelist_file(const Graph& g, const std::string& path) {
    write_text_file(path, write_edgelist(g));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::Io, "read failure on '" + path + "'");
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw Error(ErrorCode::Io, "write failure on '" + path + "'");
}

}  // namespace igp
