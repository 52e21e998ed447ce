#include "serialize.hpp"

#include <json.hpp>

#include "edgelist.hpp"  // read_text_file

namespace igp {

using nlohmann::json;

std::string assignment_to_json(const Assignment& a) {
    json rooms = json::object();
    for (const auto& [id, room] : a.rooms()) rooms[id] = room + 1;
    json doc{{"K", a.k()}, {"S", a.s()}, {"rooms", std::move(rooms)}};
    return doc.dump(2) + "\n";
}

Assignment assignment_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("assignment JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("K") || !doc.contains("S") || !doc.contains("rooms") ||
        !doc["K"].is_number_integer() || !doc["S"].is_number_integer() || !doc["rooms"].is_object())
        throw Error(ErrorCode::Parse, "assignment JSON must be {\"K\": int, \"S\": int, \"rooms\": {...}}");
    std::map<NodeId, int> rooms;
    for (const auto& [id, value] : doc["rooms"].items()) {
        if (!value.is_number_integer())
            throw Error(ErrorCode::Parse, "room of '" + id + "' is not an integer");
        rooms[id] = value.get<int>() - 1;
    }
    return Assignment(doc["K"].get<int>(), doc["S"].get<int>(), std::move(rooms));
}

Assignment assignment_from_json_file(const std::string& path) {
    return assignment_from_json(read_text_file(path));
}

std::string objective_to_json(const ObjectiveReport& rep) {
    json doc{{"intra_links", rep.intra_links},
             {"inter_links", rep.inter_links},
             {"per_room_links", rep.per_room_links}};
    return doc.dump(2) + "\n";
}

namespace {

json stats_json(const GraphStats& s) {
    json doc{{"nodes", s.node_count}, {"links", s.link_count}, {"components", s.components}};
    if (s.avg_degree_defined)
        doc["avg_degree"] = s.avg_degree_str();
    else
        doc["avg_degree"] = nullptr;
    return doc;
}

json violation_json(const Violation& v) {
    json entry{{"message", v.message()}};
    switch (v.kind) {
        case ViolationKind::UncoveredNode:
            entry["kind"] = "uncovered_node";
            entry["node"] = v.node;
            break;
        case ViolationKind::UnknownNode:
            entry["kind"] = "unknown_node";
            entry["node"] = v.node;
            break;
        case ViolationKind::OverCapacity:
            entry["kind"] = "over_capacity";
            entry["room"] = v.room + 1;
            entry["size"] = v.size;
            entry["capacity"] = v.cap;
            break;
    }
    return entry;
}

}  // namespace

std::string stats_to_json(const GraphStats& s) { return stats_json(s).dump(2) + "\n"; }

std::string violations_to_json(const std::vector<Violation>& violations) {
    json arr = json::array();
    for (const auto& v : violations) arr.push_back(violation_json(v));
    return arr.dump(2) + "\n";
}

std::string moves_to_json(const std::vector<MoveRecord>& log) {
    json arr = json::array();
    for (const auto& mv : log) {
        json entry{{"node", mv.node}, {"to_room", mv.to_room + 1}, {"delta", mv.delta}};
        if (mv.from_room >= 0)
            entry["from_room"] = mv.from_room + 1;
        else
            entry["from_room"] = nullptr;
        arr.push_back(std::move(entry));
    }
    return arr.dump(2) + "\n";
}

std::string curve_to_csv(const std::vector<CurvePoint>& points) {
    std::string out = "adjustments,intra_links\n";
    for (const auto& p : points)
        out += std::to_string(p.adjustments_done) + "," + std::to_string(p.objective) + "\n";
    return out;
}

std::string eval_report_json(const Graph& g, const Assignment& a, std::size_t* violation_count) {
    auto violations = validate(g, a);
    auto rep = objective_lenient(g, a);
    auto st = stats(g);

    json doc{{"K", a.k()},
             {"S", a.s()},
             {"intra_links", rep.intra_links},
             {"inter_links", rep.inter_links},
             {"per_room_links", rep.per_room_links},
             {"stats", stats_json(st)}};
    json arr = json::array();
    for (const auto& v : violations) arr.push_back(violation_json(v));
    doc["violations"] = std::move(arr);
    if (violation_count) *violation_count = violations.size();
    return doc.dump(2) + "\n";
}

std::string extract_report_json(const NetworkBundle& bundle,
                                const std::vector<ParseWarning>& warnings) {
    auto network_json = [](const Graph& g, const std::array<long long, 4>& kind_counts) {
        json counts = json::object();
        for (std::size_t i = 0; i < kRelationKinds.size(); ++i)
            counts[relation_kind_name(kRelationKinds[i])] = kind_counts[i];
        json doc = stats_json(stats(g));
        doc["relation_kind_counts"] = std::move(counts);
        return doc;
    };
    json warn = json::array();
    for (const auto& w : warnings)
        warn.push_back(json{{"line", w.line}, {"message", w.message}});
    json doc{{"source", bundle.source},
             {"male", network_json(bundle.male, bundle.male_kind_counts)},
             {"female", network_json(bundle.female, bundle.female_kind_counts)},
             {"warnings", std::move(warn)}};
    return doc.dump(2) + "\n";
}

}  // namespace igp
