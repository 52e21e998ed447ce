#include "igp/igp.h"

#include <cstring>
#include <map>
#include <set>
#include <string>

#include "assignment.hpp"
#include "edgelist.hpp"
#include "exact.hpp"
#include "export.hpp"
#include "extract.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "records.hpp"
#include "serialize.hpp"
#include "solvers.hpp"

struct igp_graph {
    igp::Graph value;
};

struct igp_assignment {
    igp::Assignment value;
};

struct igp_records {
    igp::RecordSet value;
};

struct igp_result {
    igp::SolveResult value;
};

namespace {

thread_local std::string g_last_error = "no error";

int fail(int code, const std::string& message) {
    g_last_error = message;
    return code;
}

int code_of(igp::ErrorCode c) {
    switch (c) {
        case igp::ErrorCode::InvalidArgument: return IGP_ERR_INVALID_ARGUMENT;
        case igp::ErrorCode::Parse: return IGP_ERR_PARSE;
        case igp::ErrorCode::Infeasible: return IGP_ERR_INFEASIBLE;
        case igp::ErrorCode::Bound: return IGP_ERR_BOUND;
        case igp::ErrorCode::Io: return IGP_ERR_IO;
        case igp::ErrorCode::Validation: return IGP_ERR_VALIDATION;
    }
    return IGP_ERR_INVALID_ARGUMENT;
}

// Runs fn, translating C++ errors into status codes.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return IGP_OK;
    } catch (const igp::Error& e) {
        return fail(code_of(e.code()), e.what());
    } catch (const std::exception& e) {
        return fail(IGP_ERR_INVALID_ARGUMENT, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int require(bool ok, const char* what) {
    if (ok) return IGP_OK;
    return fail(IGP_ERR_INVALID_ARGUMENT, std::string("null ") + what);
}

int check_int_range(long long value, long long lo, long long hi, const char* what) {
    if (value >= lo && value <= hi) return IGP_OK;
    return fail(IGP_ERR_INVALID_ARGUMENT, std::string(what) + " out of range");
}

}  // namespace

extern "C" {

const char* igp_version(void) { return "0.1.0"; }

const char* igp_last_error(void) { return g_last_error.c_str(); }

void igp_string_free(char* s) { delete[] s; }

/* ---- graphs ------------------------------------------------------- */

int igp_graph_from_edgelist(const char* text, igp_graph** out) {
    if (int rc = require(text && out, "argument")) return rc;
    return guarded([&] { *out = new igp_graph{igp::read_edgelist(text)}; });
}

int igp_graph_from_edgelist_file(const char* path, igp_graph** out) {
    if (int rc = require(path && out, "argument")) return rc;
    return guarded([&] { *out = new igp_graph{igp::read_edgelist_file(path)}; });
}

int igp_graph_to_edgelist(const igp_graph* g, char** out) {
    if (int rc = require(g && out, "argument")) return rc;
    return guarded([&] { *out = dup_string(igp::write_edgelist(g->value)); });
}

namespace {

int graphml_common(const std::string& text, igp_graph** out, igp_assignment** out_assignment) {
    return guarded([&] {
        auto data = igp::import_graphml(text);
        if (out_assignment)
            *out_assignment =
                data.assignment ? new igp_assignment{std::move(*data.assignment)} : nullptr;
        *out = new igp_graph{std::move(data.graph)};
    });
}

}  // namespace

int igp_graph_from_graphml(const char* text, igp_graph** out, igp_assignment** out_assignment) {
    if (int rc = require(text && out, "argument")) return rc;
    return graphml_common(text, out, out_assignment);
}

int igp_graph_from_graphml_file(const char* path, igp_graph** out, igp_assignment** out_assignment) {
    if (int rc = require(path && out, "argument")) return rc;
    std::string text;
    if (int rc = guarded([&] { text = igp::read_text_file(path); })) return rc;
    return graphml_common(text, out, out_assignment);
}

int igp_graph_node_count(const igp_graph* g, long long* out) {
    if (int rc = require(g && out, "argument")) return rc;
    *out = g->value.node_count();
    return IGP_OK;
}

int igp_graph_edge_count(const igp_graph* g, long long* out) {
    if (int rc = require(g && out, "argument")) return rc;
    *out = g->value.edge_count();
    return IGP_OK;
}

int igp_graph_stats_json(const igp_graph* g, char** out) {
    if (int rc = require(g && out, "argument")) return rc;
    return guarded([&] { *out = dup_string(igp::stats_to_json(igp::stats(g->value))); });
}

void igp_graph_free(igp_graph* g) { delete g; }

/* ---- synthetic instances ------------------------------------------ */

int igp_generate_planted(long long n, long long k_true, double p_in, double p_out,
                         unsigned long long seed, igp_graph** out) {
    if (int rc = require(out != nullptr, "output")) return rc;
    if (int rc = check_int_range(n, 1, 1000000, "node count")) return rc;
    if (int rc = check_int_range(k_true, 1, n, "block count")) return rc;
    return guarded([&] {
        *out = new igp_graph{igp::gen_planted(static_cast<int>(n), static_cast<int>(k_true),
                                              p_in, p_out, seed)};
    });
}

int igp_generate_scale_free(long long n, long long attach, unsigned long long seed,
                            igp_graph** out) {
    if (int rc = require(out != nullptr, "output")) return rc;
    if (int rc = check_int_range(n, 2, 1000000, "node count")) return rc;
    return guarded([&] {
        *out = new igp_graph{igp::gen_scale_free(static_cast<int>(n), static_cast<int>(attach), seed)};
    });
}

int igp_calibrate_planted(long long n, long long k_true, double target_avg_degree,
                          double ratio, double* p_in, double* p_out) {
    if (int rc = require(p_in && p_out, "output")) return rc;
    if (int rc = check_int_range(n, 2, 1000000, "node count")) return rc;
    if (int rc = check_int_range(k_true, 1, n, "block count")) return rc;
    return guarded([&] {
        auto params = igp::calibrate_planted(static_cast<int>(n), static_cast<int>(k_true),
                                             target_avg_degree, ratio);
        *p_in = params.p_in;
        *p_out = params.p_out;
    });
}

/* ---- assignments --------------------------------------------------- */

int igp_capacity_for(long long node_count, long long k, long long* out) {
    if (int rc = require(out != nullptr, "output")) return rc;
    return guarded([&] { *out = igp::capacity_for(node_count, k); });
}

int igp_assignment_from_json(const char* text, igp_assignment** out) {
    if (int rc = require(text && out, "argument")) return rc;
    return guarded([&] { *out = new igp_assignment{igp::assignment_from_json(text)}; });
}

int igp_assignment_from_json_file(const char* path, igp_assignment** out) {
    if (int rc = require(path && out, "argument")) return rc;
    return guarded([&] { *out = new igp_assignment{igp::assignment_from_json_file(path)}; });
}

int igp_assignment_to_json(const igp_assignment* a, char** out) {
    if (int rc = require(a && out, "argument")) return rc;
    return guarded([&] { *out = dup_string(igp::assignment_to_json(a->value)); });
}

int igp_assignment_k(const igp_assignment* a, long long* out) {
    if (int rc = require(a && out, "argument")) return rc;
    *out = a->value.k();
    return IGP_OK;
}

int igp_assignment_s(const igp_assignment* a, long long* out) {
    if (int rc = require(a && out, "argument")) return rc;
    *out = a->value.s();
    return IGP_OK;
}

int igp_assignment_apply_move(igp_assignment* a, const char* node, long long room) {
    if (int rc = require(a && node, "argument")) return rc;
    return guarded([&] { a->value.apply_move(node, static_cast<int>(room) - 1); });
}

void igp_assignment_free(igp_assignment* a) { delete a; }

/* ---- evaluation ----------------------------------------------------- */

int igp_objective_value(const igp_graph* g, const igp_assignment* a, long long* intra,
                        long long* inter) {
    if (int rc = require(g && a, "argument")) return rc;
    return guarded([&] {
        auto rep = igp::objective(g->value, a->value);
        if (intra) *intra = rep.intra_links;
        if (inter) *inter = rep.inter_links;
    });
}

int igp_objective_json(const igp_graph* g, const igp_assignment* a, char** out) {
    if (int rc = require(g && a && out, "argument")) return rc;
    return guarded([&] { *out = dup_string(igp::objective_to_json(igp::objective(g->value, a->value))); });
}

int igp_validate_json(const igp_graph* g, const igp_assignment* a, char** out,
                      long long* violation_count) {
    if (int rc = require(g && a, "argument")) return rc;
    return guarded([&] {
        auto violations = igp::validate(g->value, a->value);
        if (violation_count) *violation_count = static_cast<long long>(violations.size());
        if (out) *out = dup_string(igp::violations_to_json(violations));
    });
}

int igp_neighbors_in_room(const igp_graph* g, const igp_assignment* a, const char* node,
                          long long room, long long* out) {
    if (int rc = require(g && a && node && out, "argument")) return rc;
    return guarded([&] {
        *out = igp::neighbors_in_room(g->value, a->value, node, static_cast<int>(room) - 1);
    });
}

int igp_delta_move(const igp_graph* g, const igp_assignment* a, const char* node,
                   long long room, long long* delta, int* feasible) {
    if (int rc = require(g && a && node, "argument")) return rc;
    return guarded([&] {
        auto d = igp::delta_move(g->value, a->value, node, static_cast<int>(room) - 1);
        if (delta) *delta = d.delta;
        if (feasible) *feasible = d.feasible ? 1 : 0;
    });
}

int igp_eval_report_json(const igp_graph* g, const igp_assignment* a, char** out,
                         long long* violation_count) {
    if (int rc = require(g && a && out, "argument")) return rc;
    return guarded([&] {
        std::size_t count = 0;
        *out = dup_string(igp::eval_report_json(g->value, a->value, &count));
        if (violation_count) *violation_count = static_cast<long long>(count);
    });
}

/* ---- solvers -------------------------------------------------------- */

int igp_solve_hfa(const igp_graph* g, long long k, unsigned long long seed, igp_result** out) {
    if (int rc = require(g && out, "argument")) return rc;
    if (int rc = check_int_range(k, INT32_MIN, INT32_MAX, "K")) return rc;
    return guarded([&] {
        *out = new igp_result{igp::hfa(g->value, {static_cast<int>(k), seed})};
    });
}

int igp_solve_exact(const igp_graph* g, long long k, long long node_bound, igp_result** out) {
    if (int rc = require(g && out, "argument")) return rc;
    if (int rc = check_int_range(k, INT32_MIN, INT32_MAX, "K")) return rc;
    return guarded([&] {
        int bound = node_bound <= 0 ? igp::kExactDefaultBound : static_cast<int>(node_bound);
        auto res = igp::exact(g->value, static_cast<int>(k), bound);
        *out = new igp_result{
            {std::move(res.assignment), {}, res.objective, {}, igp::StopReason::BudgetExhausted}};
    });
}

int igp_solve_random(const igp_graph* g, long long k, unsigned long long seed, igp_result** out) {
    if (int rc = require(g && out, "argument")) return rc;
    if (int rc = check_int_range(k, INT32_MIN, INT32_MAX, "K")) return rc;
    return guarded([&] {
        *out = new igp_result{igp::random_baseline(g->value, static_cast<int>(k), seed)};
    });
}

int igp_adjust_lga(const igp_graph* g, const igp_assignment* start, long long m,
                   unsigned long long seed, int stop_on_no_gain, int allow_requeue,
                   igp_result** out) {
    if (int rc = require(g && start && out, "argument")) return rc;
    return guarded([&] {
        igp::AdjustPlan plan{m, stop_on_no_gain != 0, allow_requeue != 0};
        *out = new igp_result{igp::lga(g->value, start->value, plan, {0, seed})};
    });
}

int igp_curve_csv(const igp_graph* g, const igp_assignment* start, long long m_max,
                  unsigned long long seed, int stop_on_no_gain, int allow_requeue,
                  char** out_csv) {
    if (int rc = require(g && start && out_csv, "argument")) return rc;
    return guarded([&] {
        igp::AdjustPlan plan{m_max, stop_on_no_gain != 0, allow_requeue != 0};
        auto res = igp::lga(g->value, start->value, plan, {0, seed});
        *out_csv = dup_string(igp::curve_to_csv(res.curve));
    });
}

/* ---- solver results -------------------------------------------------- */

int igp_result_objective(const igp_result* r, long long* out) {
    if (int rc = require(r && out, "argument")) return rc;
    *out = r->value.objective;
    return IGP_OK;
}

int igp_result_move_count(const igp_result* r, long long* out) {
    if (int rc = require(r && out, "argument")) return rc;
    *out = static_cast<long long>(r->value.log.size());
    return IGP_OK;
}

int igp_result_stop_reason(const igp_result* r, int* out) {
    if (int rc = require(r && out, "argument")) return rc;
    switch (r->value.stop) {
        case igp::StopReason::BudgetExhausted: *out = IGP_STOP_BUDGET; break;
        case igp::StopReason::NoImprovingFeasibleMove: *out = IGP_STOP_NO_GAIN; break;
        case igp::StopReason::QueueEmpty: *out = IGP_STOP_QUEUE_EMPTY; break;
    }
    return IGP_OK;
}

int igp_result_assignment(const igp_result* r, igp_assignment** out) {
    if (int rc = require(r && out, "argument")) return rc;
    return guarded([&] { *out = new igp_assignment{r->value.assignment}; });
}

int igp_result_moves_json(const igp_result* r, char** out) {
    if (int rc = require(r && out, "argument")) return rc;
    return guarded([&] { *out = dup_string(igp::moves_to_json(r->value.log)); });
}

void igp_result_free(igp_result* r) { delete r; }

/* ---- exports ---------------------------------------------------------- */

int igp_export_dot(const igp_graph* g, const igp_assignment* a, char** out) {
    if (int rc = require(g && out, "argument")) return rc;
    return guarded([&] { *out = dup_string(igp::export_dot(g->value, a ? &a->value : nullptr)); });
}

int igp_export_graphml(const igp_graph* g, const igp_assignment* a, char** out) {
    if (int rc = require(g && out, "argument")) return rc;
    return guarded([&] { *out = dup_string(igp::export_graphml(g->value, a ? &a->value : nullptr)); });
}

/* ---- record ingestion -------------------------------------------------- */

int igp_records_parse(const char* text, igp_records** out) {
    if (int rc = require(text && out, "argument")) return rc;
    return guarded([&] { *out = new igp_records{igp::parse_records(text)}; });
}

int igp_records_parse_file(const char* path, igp_records** out) {
    if (int rc = require(path && out, "argument")) return rc;
    return guarded([&] { *out = new igp_records{igp::parse_records_file(path)}; });
}

int igp_records_count(const igp_records* r, long long* out) {
    if (int rc = require(r && out, "argument")) return rc;
    *out = static_cast<long long>(r->value.records.size());
    return IGP_OK;
}

int igp_records_warnings_json(const igp_records* r, char** out) {
    if (int rc = require(r && out, "argument")) return rc;
    return guarded([&] {
        std::string json = "[";
        for (std::size_t i = 0; i < r->value.warnings.size(); ++i) {
            if (i) json += ",";
            json += "{\"line\":" + std::to_string(r->value.warnings[i].line) + ",\"message\":\"";
            for (char c : r->value.warnings[i].message) {
                if (c == '"' || c == '\\') json += '\\';
                json += c;
            }
            json += "\"}";
        }
        json += "]\n";
        *out = dup_string(json);
    });
}

int igp_extract_networks(const igp_records* r, const char* source_name, igp_graph** out_male,
                         igp_graph** out_female, char** out_report_json) {
    if (int rc = require(r != nullptr, "records")) return rc;
    return guarded([&] {
        auto edges = igp::extract_relations(r->value.records);
        auto bundle = igp::build_networks(r->value.records, edges,
                                          source_name ? source_name : "");
        if (out_report_json)
            *out_report_json = dup_string(igp::extract_report_json(bundle, r->value.warnings));
        if (out_male) *out_male = new igp_graph{std::move(bundle.male)};
        if (out_female) *out_female = new igp_graph{std::move(bundle.female)};
    });
}

int igp_records_manual_assignment(const igp_records* r, const char* gender, long long k,
                                  igp_assignment** out) {
    if (int rc = require(r && gender && out, "argument")) return rc;
    return guarded([&] {
        igp::Gender want;
        std::string gs = gender;
        if (gs == "M")
            want = igp::Gender::Male;
        else if (gs == "F")
            want = igp::Gender::Female;
        else
            throw igp::Error(igp::ErrorCode::InvalidArgument, "gender must be \"M\" or \"F\"");

        std::set<std::string> labels;
        long long members = 0;
        for (const auto& rec : r->value.records) {
            if (rec.gender != want) continue;
            ++members;
            if (rec.room.empty())
                throw igp::Error(igp::ErrorCode::Validation,
                                 "record '" + rec.id + "' has no room label");
            labels.insert(rec.room);
        }
        if (members == 0)
            throw igp::Error(igp::ErrorCode::Validation, "no records of gender " + gs);

        std::map<std::string, int> room_index;
        for (const auto& label : labels)
            room_index.emplace(label, static_cast<int>(room_index.size()));
        int kk = k <= 0 ? static_cast<int>(labels.size()) : static_cast<int>(k);
        if (kk < static_cast<int>(labels.size()))
            throw igp::Error(igp::ErrorCode::Validation,
                             "K smaller than the number of distinct room labels");

        std::map<igp::NodeId, int> rooms;
        for (const auto& rec : r->value.records)
            if (rec.gender == want) rooms[rec.id] = room_index.at(rec.room);
        *out = new igp_assignment{
            igp::Assignment(kk, igp::capacity_for(members, kk), std::move(rooms))};
    });
}

void igp_records_free(igp_records* r) { delete r; }

}  // extern "C"
