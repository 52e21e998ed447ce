#include "records.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "edgelist.hpp"  // read_text_file

namespace igp {

namespace {

constexpr const char* kHeader = "id,room,gender,case_number,crime_type,birth_place,ties";

[[noreturn]] void malformed(int line, const std::string& what) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

// One CSV row; supports RFC 4180 style double-quoted fields.
std::vector<std::string> split_csv(const std::string& line, int lineno) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) malformed(lineno, "unterminated quoted field");
    fields.push_back(cur);
    return fields;
}

std::vector<std::string> split_ties(const std::string& field) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(field);
    while (std::getline(in, cur, ';')) {
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

}  // namespace

RecordSet parse_records(const std::string& text) {
    RecordSet rs;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line))
        throw Error(ErrorCode::Parse, "empty record file (missing header)");
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kHeader)
        malformed(lineno, "expected header '" + std::string(kHeader) + "'");

    std::set<std::string> seen;
    std::vector<std::vector<std::string>> raw_ties;
    std::vector<int> row_lines;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv(line, lineno);
        if (fields.size() != 7)
            malformed(lineno, "expected 7 fields, found " + std::to_string(fields.size()));

        DetaineeRecord rec;
        rec.id = fields[0];
        if (rec.id.empty()) malformed(lineno, "empty id");
        if (!seen.insert(rec.id).second)
            throw Error(ErrorCode::Parse,
                        "line " + std::to_string(lineno) + ": duplicate id '" + rec.id + "'");
        rec.room = fields[1];
        if (fields[2] == "M")
            rec.gender = Gender::Male;
        else if (fields[2] == "F")
            rec.gender = Gender::Female;
        else
            malformed(lineno, "gender must be 'M' or 'F', found '" + fields[2] + "'");
        rec.case_number = fields[3];
        rec.crime_type = fields[4];
        rec.birth_place = fields[5];

        raw_ties.push_back(split_ties(fields[6]));
        row_lines.push_back(lineno);
        rs.records.push_back(std::move(rec));
    }

    // ties are resolved after the full id set is known
    for (std::size_t i = 0; i < rs.records.size(); ++i) {
        std::set<std::string> cleaned;
        for (const auto& tie : raw_ties[i]) {
            if (tie == rs.records[i].id) {
                rs.warnings.push_back({row_lines[i], "record '" + rs.records[i].id +
                                                         "' lists itself as a tie; dropped"});
            } else if (!seen.count(tie)) {
                rs.warnings.push_back({row_lines[i], "record '" + rs.records[i].id +
                                                         "' ties unknown id '" + tie + "'; dropped"});
            } else {
                cleaned.insert(tie);
            }
        }
        rs.records[i].ties.assign(cleaned.begin(), cleaned.end());
    }
    return rs;
}

RecordSet parse_records_file(const std::string& path) {
    return parse_records(read_text_file(path));
}

}  // namespace igp
