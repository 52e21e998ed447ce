#include "export.hpp"

#include <cmath>
#include <cstdio>
#include <map>

namespace igp {

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string xml_unescape(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size();) {
        if (s[i] != '&') {
            out += s[i++];
            continue;
        }
        auto end = s.find(';', i);
        if (end == std::string::npos) throw Error(ErrorCode::Parse, "graphml: bare '&'");
        std::string ent = s.substr(i, end - i + 1);
        if (ent == "&amp;") out += '&';
        else if (ent == "&lt;") out += '<';
        else if (ent == "&gt;") out += '>';
        else if (ent == "&quot;") out += '"';
        else if (ent == "&apos;") out += '\'';
        else throw Error(ErrorCode::Parse, "graphml: unknown entity " + ent);
        i = end + 1;
    }
    return out;
}

std::string room_color(int room, int k) {
    // distinct hue per room, HSV triple understood by graphviz
    char buf[32];
    double hue = k > 0 ? static_cast<double>(room) / k : 0.0;
    std::snprintf(buf, sizeof buf, "%.3f 0.500 0.900", hue);
    return buf;
}

}  // namespace

std::string export_dot(const Graph& g, const Assignment* a) {
    std::string out = "graph allocation {\n";
    if (a) out += "  node [style=filled];\n";
    for (int v = 0; v < g.node_count(); ++v) {
        out += "  " + dot_quote(g.id_of(v));
        if (a) {
            if (auto room = a->room_of(g.id_of(v))) {
                out += " [room=" + std::to_string(*room + 1) + ", fillcolor=\"" +
                       room_color(*room, a->k()) + "\"]";
            }
        }
        out += ";\n";
    }
    for (int u = 0; u < g.node_count(); ++u)
        for (int v : g.neighbors(u))
            if (v > u) out += "  " + dot_quote(g.id_of(u)) + " -- " + dot_quote(g.id_of(v)) + ";\n";
    out += "}\n";
    return out;
}

std::string export_graphml(const Graph& g, const Assignment* a) {
    std::string out =
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        "  <key id=\"room\" for=\"node\" attr.name=\"room\" attr.type=\"int\"/>\n"
        "  <key id=\"K\" for=\"graph\" attr.name=\"K\" attr.type=\"int\"/>\n"
        "  <key id=\"S\" for=\"graph\" attr.name=\"S\" attr.type=\"int\"/>\n"
        "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    if (a) {
        out += "    <data key=\"K\">" + std::to_string(a->k()) + "</data>\n";
        out += "    <data key=\"S\">" + std::to_string(a->s()) + "</data>\n";
    }
    for (int v = 0; v < g.node_count(); ++v) {
        std::string id = xml_escape(g.id_of(v));
        if (a && a->room_of(g.id_of(v))) {
            out += "    <node id=\"" + id + "\"><data key=\"room\">" +
                   std::to_string(*a->room_of(g.id_of(v)) + 1) + "</data></node>\n";
        } else {
            out += "    <node id=\"" + id + "\"/>\n";
        }
    }
    for (int u = 0; u < g.node_count(); ++u)
        for (int v : g.neighbors(u))
            if (v > u)
                out += "    <edge source=\"" + xml_escape(g.id_of(u)) + "\" target=\"" +
                       xml_escape(g.id_of(v)) + "\"/>\n";
    out += "  </graph>\n</graphml>\n";
    return out;
}

namespace {

// Minimal tag scanner for the documents export_graphml produces.
struct Tag {
    std::string name;
    std::map<std::string, std::string> attrs;
    bool closing = false;      // </name>
    bool self_closing = false; // <name/>
    std::size_t end = 0;       // index just past '>'
};

std::optional<Tag> next_tag(const std::string& text, std::size_t from) {
    auto lt = text.find('<', from);
    if (lt == std::string::npos) return std::nullopt;
    auto gt = text.find('>', lt);
    if (gt == std::string::npos) throw Error(ErrorCode::Parse, "graphml: unterminated tag");
    std::string body = text.substr(lt + 1, gt - lt - 1);
    Tag tag;
    tag.end = gt + 1;
    if (!body.empty() && body.front() == '?') {  // xml declaration
        tag.name = "?";
        return tag;
    }
    if (!body.empty() && body.front() == '/') {
        tag.closing = true;
        body.erase(0, 1);
    }
    if (!body.empty() && body.back() == '/') {
        tag.self_closing = true;
        body.pop_back();
    }
    std::size_t i = 0;
    while (i < body.size() && !isspace(static_cast<unsigned char>(body[i]))) ++i;
    tag.name = body.substr(0, i);
    while (i < body.size()) {
        while (i < body.size() && isspace(static_cast<unsigned char>(body[i]))) ++i;
        if (i >= body.size()) break;
        auto eq = body.find('=', i);
        if (eq == std::string::npos) throw Error(ErrorCode::Parse, "graphml: malformed attribute");
        std::string key = body.substr(i, eq - i);
        if (eq + 1 >= body.size() || body[eq + 1] != '"')
            throw Error(ErrorCode::Parse, "graphml: attribute value must be quoted");
        auto close = body.find('"', eq + 2);
        if (close == std::string::npos) throw Error(ErrorCode::Parse, "graphml: unterminated attribute");
        tag.attrs[key] = xml_unescape(body.substr(eq + 2, close - eq - 2));
        i = close + 1;
    }
    return tag;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return value;
    } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "graphml: " + what + " is not an integer: '" + s + "'");
    }
}

}  // namespace

GraphmlData import_graphml(const std::string& text) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<NodeId> all_nodes;
    std::map<NodeId, int> rooms;  // 1-based as read
    std::optional<int> k, s;

    std::size_t pos = 0;
    std::string pending_node;   // open <node> awaiting </node>
    std::string pending_key;    // open <data> key
    std::size_t data_start = 0;
    bool graph_level = true;

    while (auto tag = next_tag(text, pos)) {
        std::size_t tag_start = text.find('<', pos);
        if (tag->name == "data" && !tag->closing) {
            pending_key = tag->attrs.count("key") ? tag->attrs.at("key") : "";
            data_start = tag->end;
        } else if (tag->name == "data" && tag->closing) {
            std::string value = text.substr(data_start, tag_start - data_start);
            if (pending_key == "room" && !pending_node.empty())
                rooms[pending_node] = parse_int(value, "room");
            else if (pending_key == "K" && graph_level)
                k = parse_int(value, "K");
            else if (pending_key == "S" && graph_level)
                s = parse_int(value, "S");
            pending_key.clear();
        } else if (tag->name == "node" && !tag->closing) {
            if (!tag->attrs.count("id")) throw Error(ErrorCode::Parse, "graphml: node without id");
            all_nodes.push_back(tag->attrs.at("id"));
            graph_level = false;
            if (!tag->self_closing) pending_node = tag->attrs.at("id");
        } else if (tag->name == "node" && tag->closing) {
            pending_node.clear();
        } else if (tag->name == "edge" && !tag->closing) {
            if (!tag->attrs.count("source") || !tag->attrs.count("target"))
                throw Error(ErrorCode::Parse, "graphml: edge without source/target");
            edges.emplace_back(tag->attrs.at("source"), tag->attrs.at("target"));
            graph_level = false;
        }
        pos = tag->end;
    }

    GraphmlData out{Graph::from_edges(edges, all_nodes), std::nullopt};
    if (!rooms.empty()) {
        int max_room = 0;
        for (const auto& [id, room] : rooms) max_room = std::max(max_room, room);
        int kk = k.value_or(max_room);
        int ss = s.value_or(capacity_for(out.graph.node_count(), kk));
        std::map<NodeId, int> zero_based;
        for (const auto& [id, room] : rooms) zero_based[id] = room - 1;
        out.assignment = Assignment(kk, ss, std::move(zero_based));
    }
    return out;
}

}  // namespace igp
