/* revsim — reversible pebble games, their strategies, and checkpointed
 * reversible simulation of Turing machines, behind a plain C surface.
 *
 * All functions return rvs_status; results come back through out
 * parameters. Strings returned through char** are heap-allocated and must
 * be released with rvs_string_free. On any non-RVS_OK return,
 * rvs_last_error() carries a human-readable message (thread-local).
 */
#ifndef REVSIM_H
#define REVSIM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rvs_status {
    RVS_OK = 0,
    RVS_ERR_INVALID_ARGUMENT = 1,
    RVS_ERR_ILLEGAL_MOVE = 2,
    RVS_ERR_NOT_REVERSIBLE = 3,
    RVS_ERR_PARSE = 4,
    RVS_ERR_TOO_LARGE = 5,
    RVS_ERR_STEP_CAP = 6,
    RVS_ERR_RUNTIME = 7
} rvs_status;

const char* rvs_status_name(rvs_status status);
const char* rvs_last_error(void);
void rvs_string_free(char* s);

/* --- pebble strategies ------------------------------------------------ */

typedef struct rvs_strategy rvs_strategy;

/* Bennett's recursive pebbling from node `start` (0 for standalone play)
 * with `depth` pebbles. */
rvs_status rvs_strategy_bennett(int start, int depth, rvs_strategy** out);

/* Springboard strategy for a game of length m * 2^depth, depth+2 pebbles,
 * at most m-1 erasures. */
rvs_status rvs_strategy_erasure(int depth, int m, rvs_strategy** out);

void rvs_strategy_free(rvs_strategy* s);

int rvs_strategy_length(const rvs_strategy* s);       /* move count */
int rvs_strategy_game_length(const rvs_strategy* s);  /* T_G */
int rvs_strategy_pebbles(const rvs_strategy* s);      /* pool size */
int rvs_strategy_peak(const rvs_strategy* s);         /* peak placed pebbles */
int rvs_strategy_erasures(const rvs_strategy* s);

/* Serializes in the trace format:
 *   game T_G=<int> n=<int> budget=<int>
 *   P <i> | R <i> | E <i>   (one per line) */
rvs_status rvs_strategy_to_trace(const rvs_strategy* s, char** out);

/* --- trace and configuration checking --------------------------------- */

/* Replays a trace from the empty configuration. On success *failed_index
 * is -1 and *summary reports length, peak and erasures. On an illegal
 * move, returns RVS_ERR_ILLEGAL_MOVE with *failed_index set. */
rvs_status rvs_trace_verify(const char* trace_text, int* failed_index,
                            char** summary);

/* Decides whether the configuration with the given occupied nodes
 * (comma-separated list, empty string for the empty board) is reachable
 * from the empty board. When it is, *witness carries the removal-order
 * witness and its induced numbering. */
rvs_status rvs_config_check(int game_length, int pebbles,
                            const char* occupied_csv, int* realizable,
                            char** witness);

/* Breadth-first enumeration of all reachable configurations. *listing gets
 * one `f=..;occ=..` line per configuration, sorted. */
rvs_status rvs_enumerate(int game_length, int pebbles, int* max_node,
                         char** listing);

/* CSV of the space-vs-erasure exchange rows for k in [k_min, k_max]. */
rvs_status rvs_tradeoff_csv(int n, int k_min, int k_max, char** csv);

/* --- Turing machines and simulation ----------------------------------- */

typedef struct rvs_machine rvs_machine;

rvs_status rvs_machine_parse(const char* text, rvs_machine** out);
void rvs_machine_free(rvs_machine* m);

/* Canonical echo of the machine file. */
rvs_status rvs_machine_canonical(const rvs_machine* m, char** out);

/* Static checks; *detail names an offending quadruple pair when a check
 * fails (empty otherwise). */
rvs_status rvs_machine_check(const rvs_machine* m, int* deterministic,
                             int* reversible, char** detail);

/* Direct (irreversible) execution; *tape_out gets the final tape text. */
rvs_status rvs_machine_run(const rvs_machine* m, const char* input,
                           long long step_cap, long long* steps,
                           long long* space, char** tape_out);

/* Checkpointed reversible simulation. `plan` is "min_space" or
 * "erasure:<k>"; segment_length 0 means "use the measured space of a
 * profiling pre-run". When unknown_time is nonzero the doubling driver is
 * used instead of a pre-sized plan. *event_log gets MOVE/SEG/HALT lines
 * and a final REPORT line. */
rvs_status rvs_simulate(const rvs_machine* m, const char* input,
                        const char* plan, int unknown_time,
                        long long segment_length, long long step_cap,
                        char** event_log);

#ifdef __cplusplus
}
#endif

#endif /* REVSIM_H */
