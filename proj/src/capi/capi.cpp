#include "revsim.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "core/sim.hpp"
#include "core/solvability.hpp"
#include "core/strategy.hpp"
#include "core/tm.hpp"

using namespace revsim;

struct rvs_strategy {
    Strategy inner;
};

struct rvs_machine {
    MachineSpec inner;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

rvs_status set_error(rvs_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

// Runs `fn`, translating the library's exceptions into status codes.
template <typename Fn>
rvs_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return RVS_OK;
    } catch (const IllegalMove& e) {
        return set_error(RVS_ERR_ILLEGAL_MOVE, e.what());
    } catch (const NotReversible& e) {
        return set_error(RVS_ERR_NOT_REVERSIBLE, e.what());
    } catch (const ParseError& e) {
        return set_error(RVS_ERR_PARSE, e.what());
    } catch (const InstanceTooLarge& e) {
        return set_error(RVS_ERR_TOO_LARGE, e.what());
    } catch (const StepCapExceeded& e) {
        return set_error(RVS_ERR_STEP_CAP, e.what());
    } catch (const CapExceeded& e) {
        return set_error(RVS_ERR_STEP_CAP, e.what());
    } catch (const InvalidParameters& e) {
        return set_error(RVS_ERR_INVALID_ARGUMENT, e.what());
    } catch (const Error& e) {
        return set_error(RVS_ERR_RUNTIME, e.what());
    } catch (const std::exception& e) {
        return set_error(RVS_ERR_RUNTIME, e.what());
    }
}

std::vector<int> parse_csv_nodes(const char* csv) {
    std::vector<int> out;
    if (!csv) return out;
    std::string s(csv);
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

}  // namespace

extern "C" {

const char* rvs_status_name(rvs_status status) {
    switch (status) {
    case RVS_OK: return "ok";
    case RVS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RVS_ERR_ILLEGAL_MOVE: return "illegal move";
    case RVS_ERR_NOT_REVERSIBLE: return "not reversible";
    case RVS_ERR_PARSE: return "parse error";
    case RVS_ERR_TOO_LARGE: return "instance too large";
    case RVS_ERR_STEP_CAP: return "step cap exceeded";
    case RVS_ERR_RUNTIME: return "runtime error";
    }
    return "unknown";
}

const char* rvs_last_error(void) { return g_last_error.c_str(); }

void rvs_string_free(char* s) { std::free(s); }

rvs_status rvs_strategy_bennett(int start, int depth, rvs_strategy** out) {
    if (!out) return set_error(RVS_ERR_INVALID_ARGUMENT, "out is null");
    return guarded([&] {
        *out = new rvs_strategy{bennett_pebble(start, depth)};
    });
}

rvs_status rvs_strategy_erasure(int depth, int m, rvs_strategy** out) {
    if (!out) return set_error(RVS_ERR_INVALID_ARGUMENT, "out is null");
    return guarded([&] {
        *out = new rvs_strategy{erasure_strategy(depth, m)};
    });
}

void rvs_strategy_free(rvs_strategy* s) { delete s; }

int rvs_strategy_length(const rvs_strategy* s) {
    return s ? static_cast<int>(s->inner.moves.size()) : -1;
}
int rvs_strategy_game_length(const rvs_strategy* s) {
    return s ? s->inner.game_length : -1;
}
int rvs_strategy_pebbles(const rvs_strategy* s) {
    return s ? s->inner.pebbles : -1;
}
int rvs_strategy_peak(const rvs_strategy* s) {
    return s ? s->inner.peak : -1;
}
int rvs_strategy_erasures(const rvs_strategy* s) {
    return s ? s->inner.erasures : -1;
}

rvs_status rvs_strategy_to_trace(const rvs_strategy* s, char** out) {
    if (!s || !out) return set_error(RVS_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = dup_string(strategy_to_trace(s->inner)); });
}

rvs_status rvs_trace_verify(const char* trace_text, int* failed_index,
                            char** summary) {
    if (!trace_text) return set_error(RVS_ERR_INVALID_ARGUMENT, "null trace");
    if (failed_index) *failed_index = -1;
    try {
        const TraceFile tf = parse_trace(trace_text);
        const GameTrace t = replay(PebbleConfig(tf.game_length, tf.total_pebbles),
                                   tf.moves, tf.erasure_budget);
        if (summary) {
            std::ostringstream os;
            os << "OK moves=" << t.moves.size() << " peak=" << t.peak_pebbles
               << " erasures=" << t.erasures_used
               << " final=" << format_config(t.final) << "\n";
            *summary = dup_string(os.str());
        }
        g_last_error.clear();
        return RVS_OK;
    } catch (const IllegalMove& e) {
        if (failed_index) *failed_index = e.move_index;
        return set_error(RVS_ERR_ILLEGAL_MOVE, e.what());
    } catch (const ParseError& e) {
        return set_error(RVS_ERR_PARSE, e.what());
    } catch (const std::exception& e) {
        return set_error(RVS_ERR_RUNTIME, e.what());
    }
}

rvs_status rvs_config_check(int game_length, int pebbles,
                            const char* occupied_csv, int* realizable,
                            char** witness) {
    if (!realizable) return set_error(RVS_ERR_INVALID_ARGUMENT, "out is null");
    return guarded([&] {
        const PebbleConfig config = PebbleConfig::with_occupied(
            game_length, pebbles, parse_csv_nodes(occupied_csv));
        const SolveResult res = is_weakly_solvable(config);
        *realizable = res.solvable ? 1 : 0;
        if (witness) {
            std::ostringstream os;
            if (res.solvable) {
                os << "removal_order=";
                for (size_t i = 0; i < res.removal_order.size(); ++i)
                    os << (i ? "," : "") << res.removal_order[i];
                os << "\nnumbering=";
                const Numbering num =
                    numbering_from_removal_order(config, res.removal_order);
                bool first = true;
                for (const auto& [node, rank] : num) {
                    os << (first ? "" : ",") << node << "->" << rank;
                    first = false;
                }
                os << "\n";
            }
            *witness = dup_string(os.str());
        }
    });
}

rvs_status rvs_enumerate(int game_length, int pebbles, int* max_node,
                         char** listing) {
    return guarded([&] {
        const ReachableSet rs = enumerate_reachable(game_length, pebbles);
        if (max_node) *max_node = rs.max_node();
        if (listing) {
            std::ostringstream os;
            for (std::uint64_t m : rs.configs) {
                std::vector<int> occ;
                for (int i = 1; i <= game_length; ++i)
                    if ((m >> (i - 1)) & 1) occ.push_back(i);
                os << format_config(PebbleConfig::with_occupied(
                          game_length, pebbles, occ))
                   << "\n";
            }
            *listing = dup_string(os.str());
        }
    });
}

rvs_status rvs_tradeoff_csv(int n, int k_min, int k_max, char** csv) {
    if (!csv) return set_error(RVS_ERR_INVALID_ARGUMENT, "out is null");
    return guarded([&] {
        *csv = dup_string(tradeoff_csv(tradeoff_table(n, k_min, k_max)));
    });
}

rvs_status rvs_machine_parse(const char* text, rvs_machine** out) {
    if (!text || !out) return set_error(RVS_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new rvs_machine{MachineSpec::parse(text)}; });
}

void rvs_machine_free(rvs_machine* m) { delete m; }

rvs_status rvs_machine_canonical(const rvs_machine* m, char** out) {
    if (!m || !out) return set_error(RVS_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = dup_string(m->inner.canonical()); });
}

rvs_status rvs_machine_check(const rvs_machine* m, int* deterministic,
                             int* reversible, char** detail) {
    if (!m) return set_error(RVS_ERR_INVALID_ARGUMENT, "null machine");
    return guarded([&] {
        std::ostringstream os;
        const auto det = check_deterministic(m->inner);
        const auto rev = check_reversible(m->inner);
        if (deterministic) *deterministic = det ? 0 : 1;
        if (reversible) *reversible = rev ? 0 : 1;
        if (det)
            os << "domain overlap: quadruples " << det->first << " and "
               << det->second << "\n";
        else if (rev)
            os << "range overlap: quadruples " << rev->first << " and "
               << rev->second << "\n";
        if (detail) *detail = dup_string(os.str());
    });
}

rvs_status rvs_machine_run(const rvs_machine* m, const char* input,
                           long long step_cap, long long* steps,
                           long long* space, char** tape_out) {
    if (!m || !input) return set_error(RVS_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const RunResult r = run(m->inner, input, step_cap);
        if (steps) *steps = r.steps;
        if (space) *space = r.cells_visited;
        if (tape_out) *tape_out = dup_string(tape_to_string(m->inner, r.final));
    });
}

rvs_status rvs_simulate(const rvs_machine* m, const char* input,
                        const char* plan_str, int unknown_time,
                        long long segment_length, long long step_cap,
                        char** event_log) {
    if (!m || !input) return set_error(RVS_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const MachineSpec& spec = m->inner;
        long long L = segment_length;
        long long T = 0, S = 0;
        if (L <= 0 || !unknown_time) {
            const RunResult prof = run(spec, input, step_cap);
            T = prof.steps;
            S = prof.cells_visited;
            if (L <= 0) L = std::max<long long>(1, S);
        }
        SimOutcome out;
        if (unknown_time) {
            const long long max_t =
                std::max<long long>(4, 4 * ((step_cap + L - 1) / L));
            out = simulate_unknown_T(spec, input, L, max_t);
        } else {
            PlanMode mode = PlanMode::MinSpace;
            int k = 0;
            if (plan_str && std::strncmp(plan_str, "erasure:", 8) == 0) {
                mode = PlanMode::Erasure;
                k = std::stoi(plan_str + 8);
            } else if (plan_str && std::strcmp(plan_str, "min_space") != 0 &&
                       *plan_str != '\0') {
                throw InvalidParameters(
                    "plan must be `min_space` or `erasure:<k>`");
            }
            Plan p = plan(std::max<long long>(1, T), L, mode, k);
            out = simulate_with_strategy(spec, input, p.strategy, L);
        }
        if (event_log) {
            std::ostringstream os;
            os << out.event_log;
            os << "FINAL halted=" << (out.halted ? 1 : 0)
               << " tape=" << tape_to_string(spec, out.final) << "\n";
            *event_log = dup_string(os.str());
        }
    });
}

}  // extern "C"
