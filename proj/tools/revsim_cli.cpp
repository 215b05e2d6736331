// Command-line front end for reproduction runs. Links only the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "revsim.h"

namespace {

int fail(rvs_status st) {
    std::cerr << "error: " << rvs_status_name(st) << ": " << rvs_last_error()
              << "\n";
    return st == RVS_ERR_INVALID_ARGUMENT || st == RVS_ERR_PARSE ? 2 : 1;
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
}

struct Owned {
    char* s = nullptr;
    ~Owned() { rvs_string_free(s); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reversible pebble games, strategies and checkpointed "
                 "simulation of Turing machines"};
    app.require_subcommand(1);

    // strategy
    std::string strat_kind, output;
    int depth = 0, blocks = 1, start = 0;
    auto* strategy_cmd =
        app.add_subcommand("strategy", "generate a pebbling strategy trace");
    strategy_cmd->add_option("kind", strat_kind, "bennett | erasure")
        ->required()
        ->check(CLI::IsMember({"bennett", "erasure"}));
    strategy_cmd->add_option("-n,--depth", depth, "recursion depth / pebbles")
        ->required();
    strategy_cmd->add_option("-m,--blocks", blocks,
                             "springboard blocks (erasure only)");
    strategy_cmd->add_option("-s,--start", start,
                             "anchor node (bennett only; a nonzero anchor "
                             "emits a fragment that assumes the anchor node "
                             "is already pebbled)");
    strategy_cmd->add_option("-o,--output", output, "output file (default stdout)");

    // verify
    std::string trace_path, occupied_csv;
    int game_length = 0, pebbles = 0;
    bool check_realizable = false;
    auto* verify_cmd = app.add_subcommand(
        "verify", "replay a trace, or decide realizability of a configuration");
    verify_cmd->add_option("trace", trace_path, "trace file (`-` for stdin)");
    verify_cmd->add_flag("--realizable", check_realizable,
                         "decide realizability instead of replaying");
    verify_cmd->add_option("--occ", occupied_csv,
                           "occupied nodes, comma-separated (with --realizable)");
    verify_cmd->add_option("-T,--game-length", game_length, "nodes T_G");
    verify_cmd->add_option("-n,--pebbles", pebbles, "pebble pool size");

    // enumerate
    auto* enum_cmd = app.add_subcommand(
        "enumerate", "list all configurations reachable from the empty board");
    enum_cmd->add_option("-T,--game-length", game_length, "nodes T_G")->required();
    enum_cmd->add_option("-n,--pebbles", pebbles, "pebble pool size")->required();
    enum_cmd->add_option("-o,--output", output, "output file (default stdout)");

    // simulate
    std::string machine_path, input, plan = "min_space";
    bool unknown_time = false;
    long long segment_length = 0, step_cap = 1000000;
    auto* sim_cmd = app.add_subcommand(
        "simulate", "reversibly simulate a machine via a pebble strategy");
    sim_cmd->add_option("machine", machine_path, "machine file")->required();
    sim_cmd->add_option("input", input, "input tape string");
    sim_cmd->add_option("--plan", plan, "min_space | erasure:<k>");
    sim_cmd->add_flag("--unknown-time", unknown_time,
                      "use the doubling driver instead of a pre-sized plan");
    sim_cmd->add_option("--segment-length", segment_length,
                        "steps per game node (default: measured space)");
    sim_cmd->add_option("--step-cap", step_cap, "direct-run step cap");
    sim_cmd->add_option("-o,--output", output, "output file (default stdout)");

    // tradeoff
    int k_min = 1, k_max = 1;
    auto* tradeoff_cmd = app.add_subcommand(
        "tradeoff", "CSV table of the space-vs-erasure exchange");
    tradeoff_cmd->add_option("-n,--pebbles", pebbles, "pebbles of the erasure-free game")
        ->required();
    tradeoff_cmd->add_option("--k-min", k_min, "first erasure exponent");
    tradeoff_cmd->add_option("--k-max", k_max, "last erasure exponent");
    tradeoff_cmd->add_option("-o,--output", output, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (strategy_cmd->parsed()) {
            rvs_strategy* s = nullptr;
            rvs_status st = strat_kind == "bennett"
                                ? rvs_strategy_bennett(start, depth, &s)
                                : rvs_strategy_erasure(depth, blocks, &s);
            if (st != RVS_OK) return fail(st);
            Owned trace;
            st = rvs_strategy_to_trace(s, &trace.s);
            if (st != RVS_OK) {
                rvs_strategy_free(s);
                return fail(st);
            }
            write_output(output, trace.s);
            std::cerr << "moves=" << rvs_strategy_length(s)
                      << " game_length=" << rvs_strategy_game_length(s)
                      << " pool=" << rvs_strategy_pebbles(s)
                      << " peak=" << rvs_strategy_peak(s)
                      << " erasures=" << rvs_strategy_erasures(s) << "\n";
            rvs_strategy_free(s);
            return 0;
        }

        if (verify_cmd->parsed()) {
            if (check_realizable) {
                if (game_length <= 0) {
                    std::cerr << "error: --realizable needs --game-length\n";
                    return 2;
                }
                int realizable = 0;
                Owned witness;
                const rvs_status st =
                    rvs_config_check(game_length, pebbles, occupied_csv.c_str(),
                                     &realizable, &witness.s);
                if (st != RVS_OK) return fail(st);
                if (realizable) {
                    std::cout << "REALIZABLE\n" << witness.s;
                    return 0;
                }
                std::cout << "NOT REALIZABLE\n";
                return 1;
            }
            if (trace_path.empty()) {
                std::cerr << "error: verify needs a trace file or --realizable\n";
                return 2;
            }
            const std::string text = read_file(trace_path);
            int failed_index = -1;
            Owned summary;
            const rvs_status st =
                rvs_trace_verify(text.c_str(), &failed_index, &summary.s);
            if (st == RVS_OK) {
                std::cout << summary.s;
                return 0;
            }
            if (st == RVS_ERR_ILLEGAL_MOVE) {
                std::cout << "ILLEGAL move_index=" << failed_index << " ("
                          << rvs_last_error() << ")\n";
                return 1;
            }
            return fail(st);
        }

        if (enum_cmd->parsed()) {
            int max_node = 0;
            Owned listing;
            const rvs_status st =
                rvs_enumerate(game_length, pebbles, &max_node, &listing.s);
            if (st != RVS_OK) return fail(st);
            write_output(output, std::string(listing.s) +
                                     "max_node=" + std::to_string(max_node) + "\n");
            return 0;
        }

        if (sim_cmd->parsed()) {
            rvs_machine* m = nullptr;
            rvs_status st = rvs_machine_parse(read_file(machine_path).c_str(), &m);
            if (st != RVS_OK) return fail(st);
            Owned log;
            st = rvs_simulate(m, input.c_str(), plan.c_str(),
                              unknown_time ? 1 : 0, segment_length, step_cap,
                              &log.s);
            rvs_machine_free(m);
            if (st != RVS_OK) return fail(st);
            write_output(output, log.s);
            return 0;
        }

        if (tradeoff_cmd->parsed()) {
            Owned csv;
            const rvs_status st = rvs_tradeoff_csv(pebbles, k_min, k_max, &csv.s);
            if (st != RVS_OK) return fail(st);
            write_output(output, csv.s);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
