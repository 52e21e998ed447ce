/*
 * igp - inverse graph partitioning toolkit
 *
 * C interface to the solver core. Every object is an opaque handle created
 * and destroyed by the library; every function returns an igp status code
 * (IGP_OK on success). On failure the handle out-parameters are untouched
 * and igp_last_error() describes the problem for the calling thread.
 *
 * Strings returned through char** out-parameters are heap-allocated by the
 * library and must be released with igp_string_free().
 *
 * Conventions: room indices are 1-based in every serialized format (JSON,
 * DOT, GraphML) and in this API. Randomized routines are fully determined
 * by their seed argument.
 */

#ifndef IGP_IGP_H
#define IGP_IGP_H

#ifdef __cplusplus
extern "C" {
#endif

/* status codes */
#define IGP_OK 0
#define IGP_ERR_INVALID_ARGUMENT 1 /* bad parameter or null handle */
#define IGP_ERR_PARSE 2            /* malformed input text */
#define IGP_ERR_INFEASIBLE 3       /* request violates the model (e.g. K > |V|) */
#define IGP_ERR_BOUND 4            /* instance exceeds the exhaustive-solver bound */
#define IGP_ERR_IO 5               /* file system failure */
#define IGP_ERR_VALIDATION 6       /* constraint violation in the inputs */

/* lga/curve stop reasons */
#define IGP_STOP_BUDGET 0      /* the full move budget was spent */
#define IGP_STOP_NO_GAIN 1     /* no improving feasible move remained */
#define IGP_STOP_QUEUE_EMPTY 2 /* candidate pool exhausted */

/* default node bound of the exhaustive solver */
#define IGP_EXACT_DEFAULT_BOUND 12

typedef struct igp_graph igp_graph;
typedef struct igp_assignment igp_assignment;
typedef struct igp_records igp_records;
typedef struct igp_result igp_result;

const char* igp_version(void);

/* Message for the most recent failure on this thread. Never NULL. */
const char* igp_last_error(void);

void igp_string_free(char* s);

/* ---- graphs ------------------------------------------------------- */

/* Edge-list text: `id<TAB>id` per edge, `node<TAB>id` per isolated node,
 * `#` comment lines. */
int igp_graph_from_edgelist(const char* text, igp_graph** out);
int igp_graph_from_edgelist_file(const char* path, igp_graph** out);
int igp_graph_to_edgelist(const igp_graph* g, char** out);

/* Reads the GraphML subset written by igp_export_graphml. *out_assignment
 * receives the embedded room assignment when one is present, NULL
 * otherwise; pass NULL to ignore it. */
int igp_graph_from_graphml(const char* text, igp_graph** out, igp_assignment** out_assignment);
int igp_graph_from_graphml_file(const char* path, igp_graph** out, igp_assignment** out_assignment);

int igp_graph_node_count(const igp_graph* g, long long* out);
int igp_graph_edge_count(const igp_graph* g, long long* out);

/* {"nodes", "links", "avg_degree" (three decimals or null), "components"} */
int igp_graph_stats_json(const igp_graph* g, char** out);

void igp_graph_free(igp_graph* g);

/* ---- synthetic instances ------------------------------------------ */

int igp_generate_planted(long long n, long long k_true, double p_in, double p_out,
                         unsigned long long seed, igp_graph** out);
int igp_generate_scale_free(long long n, long long attach, unsigned long long seed,
                            igp_graph** out);

/* (p_in, p_out) with p_in = ratio * p_out whose expected average degree on
 * an (n, k_true) planted graph equals target_avg_degree. */
int igp_calibrate_planted(long long n, long long k_true, double target_avg_degree,
                          double ratio, double* p_in, double* p_out);

/* ---- assignments --------------------------------------------------- */

/* S = ceil(node_count / k) */
int igp_capacity_for(long long node_count, long long k, long long* out);

/* JSON form: { "K": int, "S": int, "rooms": { "<node_id>": int } } */
int igp_assignment_from_json(const char* text, igp_assignment** out);
int igp_assignment_from_json_file(const char* path, igp_assignment** out);
int igp_assignment_to_json(const igp_assignment* a, char** out);

int igp_assignment_k(const igp_assignment* a, long long* out);
int igp_assignment_s(const igp_assignment* a, long long* out);

/* Relocates an assigned node to a different room (1-based). Capacity is not
 * checked; run igp_validate_json afterwards if it matters. */
int igp_assignment_apply_move(igp_assignment* a, const char* node, long long room);

void igp_assignment_free(igp_assignment* a);

/* ---- evaluation ----------------------------------------------------- */

/* Intra-/inter-room link counts. The assignment must cover the graph
 * exactly. */
int igp_objective_value(const igp_graph* g, const igp_assignment* a, long long* intra,
                        long long* inter);
int igp_objective_json(const igp_graph* g, const igp_assignment* a, char** out);

/* Hard-constraint check: JSON array, one entry per uncovered node, unknown
 * node or over-capacity room. Empty array means valid. */
int igp_validate_json(const igp_graph* g, const igp_assignment* a, char** out,
                      long long* violation_count);

/* Count of v's neighbors assigned to the given room (1-based). */
int igp_neighbors_in_room(const igp_graph* g, const igp_assignment* a, const char* node,
                          long long room, long long* out);

/* Objective change if `node` moved to `room`, plus a feasibility flag that
 * clears when the room is at capacity. */
int igp_delta_move(const igp_graph* g, const igp_assignment* a, const char* node,
                   long long room, long long* delta, int* feasible);

/* Full evaluation report (objective, per-room counts, graph stats,
 * violations). Tolerates invalid assignments; *violation_count tells. */
int igp_eval_report_json(const igp_graph* g, const igp_assignment* a, char** out,
                         long long* violation_count);

/* ---- solvers -------------------------------------------------------- */

/* Hub-first global heuristic. */
int igp_solve_hfa(const igp_graph* g, long long k, unsigned long long seed, igp_result** out);

/* Exhaustive optimum; refuses graphs above node_bound (<= 0 selects
 * IGP_EXACT_DEFAULT_BOUND). */
int igp_solve_exact(const igp_graph* g, long long k, long long node_bound, igp_result** out);

/* Uniformly random capacity-feasible assignment. */
int igp_solve_random(const igp_graph* g, long long k, unsigned long long seed, igp_result** out);

/* Local greedy adjustment of an existing valid assignment, at most m moves.
 * stop_on_no_gain != 0 stops at the first step with no strictly improving
 * feasible move; allow_requeue != 0 lets already-moved nodes re-enter the
 * candidate queue. */
int igp_adjust_lga(const igp_graph* g, const igp_assignment* start, long long m,
                   unsigned long long seed, int stop_on_no_gain, int allow_requeue,
                   igp_result** out);

/* CSV "adjustments,intra_links" sampled after every executed move of an
 * lga run with budget m_max. */
int igp_curve_csv(const igp_graph* g, const igp_assignment* start, long long m_max,
                  unsigned long long seed, int stop_on_no_gain, int allow_requeue,
                  char** out_csv);

/* ---- solver results -------------------------------------------------- */

int igp_result_objective(const igp_result* r, long long* out);
int igp_result_move_count(const igp_result* r, long long* out);
int igp_result_stop_reason(const igp_result* r, int* out); /* IGP_STOP_* */
int igp_result_assignment(const igp_result* r, igp_assignment** out); /* independent copy */
int igp_result_moves_json(const igp_result* r, char** out);
void igp_result_free(igp_result* r);

/* ---- exports ---------------------------------------------------------- */

/* Pass a NULL assignment to export topology only. */
int igp_export_dot(const igp_graph* g, const igp_assignment* a, char** out);
int igp_export_graphml(const igp_graph* g, const igp_assignment* a, char** out);

/* ---- record ingestion -------------------------------------------------- */

/* Record CSV: header `id,room,gender,case_number,crime_type,birth_place,ties`,
 * `ties` a semicolon-separated id list, empty string meaning unknown. */
int igp_records_parse(const char* text, igp_records** out);
int igp_records_parse_file(const char* path, igp_records** out);
int igp_records_count(const igp_records* r, long long* out);

/* JSON array of {"line", "message"} for dropped ties and similar repairs. */
int igp_records_warnings_json(const igp_records* r, char** out);

/* Builds the per-gender relation networks. Any output pointer may be NULL
 * when that artifact is not needed. The report carries per-kind edge counts,
 * per-network statistics and the parse warnings. */
int igp_extract_networks(const igp_records* r, const char* source_name, igp_graph** out_male,
                         igp_graph** out_female, char** out_report_json);

/* Manual rooms recorded in the CSV as an assignment over one gender's
 * network ("M" or "F"). Fails unless every record of that gender carries a
 * room label. k <= 0 derives K from the labels. */
int igp_records_manual_assignment(const igp_records* r, const char* gender, long long k,
                                  igp_assignment** out);

void igp_records_free(igp_records* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* IGP_IGP_H */
