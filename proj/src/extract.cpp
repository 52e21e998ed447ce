#include "extract.hpp"

#include <map>
#include <unordered_map>

namespace igp {

const char* relation_kind_name(RelationKind k) {
    switch (k) {
        case RelationKind::JointCrime: return "joint_crime";
        case RelationKind::FellowTownsmen: return "fellow_townsmen";
        case RelationKind::SameCrimeType: return "same_crime_type";
        case RelationKind::DeclaredTie: return "declared_tie";
    }
    return "?";
}

namespace {

using PairKey = std::pair<std::string, std::string>;

PairKey ordered(const std::string& x, const std::string& y) {
    return x < y ? PairKey{x, y} : PairKey{y, x};
}

// Buckets same-gender records sharing a non-missing attribute value and
// marks every pair in a bucket. Cliques are intentional: shared attributes
// relate all members pairwise.
void mark_attribute_cliques(const std::vector<DetaineeRecord>& records,
                            std::string DetaineeRecord::*field, RelationKind kind,
                            std::map<PairKey, unsigned>& edges) {
    std::unordered_map<std::string, std::vector<const DetaineeRecord*>> buckets;
    for (const auto& rec : records) {
        const std::string& value = rec.*field;
        if (value.empty()) continue;  // unknown matches nothing
        buckets[(rec.gender == Gender::Male ? "M\x1f" : "F\x1f") + value].push_back(&rec);
    }
    for (const auto& [key, members] : buckets) {
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                edges[ordered(members[i]->id, members[j]->id)] |= static_cast<unsigned>(kind);
    }
}

}  // namespace

std::vector<RelationEdge> extract_relations(const std::vector<DetaineeRecord>& records) {
    std::map<PairKey, unsigned> edges;

    mark_attribute_cliques(records, &DetaineeRecord::case_number, RelationKind::JointCrime, edges);
    mark_attribute_cliques(records, &DetaineeRecord::birth_place, RelationKind::FellowTownsmen, edges);
    mark_attribute_cliques(records, &DetaineeRecord::crime_type, RelationKind::SameCrimeType, edges);

    std::unordered_map<std::string, Gender> gender_of;
    for (const auto& rec : records) gender_of.emplace(rec.id, rec.gender);
    for (const auto& rec : records) {
        for (const auto& tie : rec.ties) {
            auto it = gender_of.find(tie);
            if (it == gender_of.end() || it->second != rec.gender) continue;
            edges[ordered(rec.id, tie)] |= static_cast<unsigned>(RelationKind::DeclaredTie);
        }
    }

    std::vector<RelationEdge> out;
    out.reserve(edges.size());
    for (const auto& [key, mask] : edges) out.push_back({key.first, key.second, mask});
    return out;
}

NetworkBundle build_networks(const std::vector<DetaineeRecord>& records,
                             const std::vector<RelationEdge>& edges,
                             const std::string& source) {
    NetworkBundle bundle;
    bundle.source = source;

    std::unordered_map<std::string, Gender> gender_of;
    std::vector<NodeId> male_ids, female_ids;
    for (const auto& rec : records) {
        gender_of.emplace(rec.id, rec.gender);
        (rec.gender == Gender::Male ? male_ids : female_ids).push_back(rec.id);
    }

    std::vector<std::pair<NodeId, NodeId>> male_edges, female_edges;
    for (const auto& e : edges) {
        bool is_male = gender_of.at(e.a) == Gender::Male;
        auto& kind_counts = is_male ? bundle.male_kind_counts : bundle.female_kind_counts;
        for (std::size_t i = 0; i < kRelationKinds.size(); ++i)
            if (e.has(kRelationKinds[i])) ++kind_counts[i];
        (is_male ? male_edges : female_edges).emplace_back(e.a, e.b);
    }

    // every record is a node; relation-free records stay isolated
    bundle.male = Graph::from_edges(male_edges, male_ids);
    bundle.female = Graph::from_edges(female_edges, female_ids);
    return bundle;
}

}  // namespace igp
