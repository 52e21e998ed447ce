#pragma once

#include <string>
#include <vector>

#include "error.hpp"

namespace igp {

enum class Gender { Male, Female };

/// One pre-coded person row. Attribute values are opaque discrete codes;
/// the empty string means "unknown" and never matches anything.
struct DetaineeRecord {
    std::string id;
    std::string room;  // manual room label; empty when absent
    Gender gender = Gender::Male;
    std::string case_number;
    std::string crime_type;
    std::string birth_place;
    std::vector<std::string> ties;  // declared relations, cleaned and sorted
};

struct ParseWarning {
    int line = 0;
    std::string message;
};

struct RecordSet {
    std::vector<DetaineeRecord> records;
    std::vector<ParseWarning> warnings;
};

/// Parses the record CSV (header `id,room,gender,case_number,crime_type,
/// birth_place,ties`; `ties` is a semicolon-separated id list). Self-ties
/// and ties to unknown ids are dropped with a warning; duplicate ids and
/// malformed rows are hard errors carrying the line number.
RecordSet parse_records(const std::string& text);
RecordSet parse_records_file(const std::string& path);

}  // namespace igp
