#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"
#include "records.hpp"

namespace igp {

enum class RelationKind : unsigned {
    JointCrime = 1u << 0,      // equal case_number
    FellowTownsmen = 1u << 1,  // equal birth_place
    SameCrimeType = 1u << 2,   // equal crime_type
    DeclaredTie = 1u << 3,     // listed in either record's ties
};

constexpr std::array<RelationKind, 4> kRelationKinds = {
    RelationKind::JointCrime, RelationKind::FellowTownsmen,
    RelationKind::SameCrimeType, RelationKind::DeclaredTie};

const char* relation_kind_name(RelationKind k);

/// One unordered same-gender pair with the full set of relations that
/// produced it. Kinds are audit data; the network keeps a single
/// unweighted edge regardless of how many kinds matched.
struct RelationEdge {
    std::string a, b;       // a < b lexicographically
    unsigned kinds = 0;     // RelationKind bitmask, non-empty

    bool has(RelationKind k) const { return (kinds & static_cast<unsigned>(k)) != 0; }
};

/// All relation edges implied by the records, sorted by endpoint pair.
/// Attribute fields equal to the empty string are unknown and match nothing;
/// pairs of different genders never relate.
std::vector<RelationEdge> extract_relations(const std::vector<DetaineeRecord>& records);

/// The two per-gender networks of one dataset plus extraction audit counts.
struct NetworkBundle {
    Graph male;
    Graph female;
    std::array<long long, 4> male_kind_counts{};    // indexed like kRelationKinds
    std::array<long long, 4> female_kind_counts{};
    std::string source;
};

NetworkBundle build_networks(const std::vector<DetaineeRecord>& records,
                             const std::vector<RelationEdge>& edges,
                             const std::string& source = "");

}  // namespace igp
