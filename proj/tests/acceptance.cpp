// End-to-end acceptance suite: one pass/fail line per criterion.

#include <bit>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "core/sim.hpp"
#include "core/solvability.hpp"
#include "core/strategy.hpp"
#include "core/tm.hpp"
#include "machines.hpp"

using namespace revsim;

namespace {

int g_failures = 0;

void report(int number, const char* title, bool ok, const std::string& detail) {
    std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number,
                title, detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++g_failures;
}

PebbleConfig from_mask(int T, int n, std::uint64_t mask) {
    std::vector<int> occ;
    for (int i = 1; i <= T; ++i)
        if ((mask >> (i - 1)) & 1) occ.push_back(i);
    return PebbleConfig::with_occupied(T, n, occ);
}

// 1. Bennett's strategy is optimal: n pebbles never pebble node 2^n, and
//    bennett_pebble(0,n) pebbles node 2^n - 1.
void criterion1() {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 4 && ok; ++n) {
        const ReachableSet rs = enumerate_reachable(1 << n, n);
        if (rs.max_node() != (1 << n) - 1) {
            ok = false;
            detail = "n=" + std::to_string(n) +
                     " BFS max node=" + std::to_string(rs.max_node());
            break;
        }
        const Strategy s = bennett_pebble(0, n);
        const GameTrace t = replay(PebbleConfig(s.game_length, n), s.moves, 0);
        if (!t.final.pebbled((1 << n) - 1)) {
            ok = false;
            detail = "bennett misses node 2^n-1 at n=" + std::to_string(n);
        }
    }
    report(1, "Bennett optimality: node 2^n unreachable, 2^n-1 pebbled", ok,
           detail);
}

// 2. The greedy realizability decision agrees with BFS membership on every
//    occupancy pattern for T_G <= 12, n <= 4.
void criterion2() {
    long long checked = 0;
    for (int T = 1; T <= 12; ++T) {
        for (int n = 0; n <= 4; ++n) {
            const ReachableSet rs = enumerate_reachable(T, n);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << T);
                 ++mask) {
                if (std::popcount(mask) > n) continue;
                ++checked;
                if (is_realizable(from_mask(T, n, mask)) != rs.contains(mask)) {
                    report(2, "realizability characterization", false,
                           "mismatch at T_G=" + std::to_string(T) +
                               " n=" + std::to_string(n) +
                               " mask=" + std::to_string(mask));
                    return;
                }
            }
        }
    }
    report(2, "realizability characterization", true,
           std::to_string(checked) + " patterns checked");
}

// 3. Weak implies strong: exhaustive removal-order search finds no stuck
//    order on any reachable configuration at the criterion-2 scale.
void criterion3() {
    long long checked = 0;
    for (int T = 1; T <= 12; ++T) {
        for (int n = 0; n <= 4; ++n) {
            const ReachableSet rs = enumerate_reachable(T, n);
            for (std::uint64_t mask : rs.configs) {
                ++checked;
                const PebbleConfig c = from_mask(T, n, mask);
                if (!is_strongly_solvable_exhaustive(c)) {
                    report(3, "weakly solvable implies strongly solvable",
                           false,
                           "stuck order at T_G=" + std::to_string(T) + " n=" +
                               std::to_string(n) + " mask=" + std::to_string(mask));
                    return;
                }
            }
        }
    }
    report(3, "weakly solvable implies strongly solvable", true,
           std::to_string(checked) + " reachable configs exhausted");
}

// 4. Step counts, both conventions, with the recurrence.
void criterion4() {
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= 10 && ok; ++n) {
        long long pow3 = 1;
        for (int i = 0; i < n; ++i) pow3 *= 3;
        const long long expected_moves = (pow3 - 1) / 2;
        const long long expected_paper = (pow3 * 3 - 1) / 2;
        if (move_count(n) != expected_moves ||
            static_cast<long long>(bennett_pebble(0, n).moves.size()) !=
                expected_moves ||
            paper_step_count(n) != expected_paper ||
            (n >= 1 && paper_step_count(n) != 3 * paper_step_count(n - 1) + 1)) {
            ok = false;
            detail = "n=" + std::to_string(n);
        }
    }
    report(4, "step counts (3^n-1)/2 and (3^(n+1)-1)/2", ok, detail);
}

// 5. Erasure lemma: n+2 pebbles, <= m-1 erasures, reaches m*2^n, length
//    within 2x of 2m*3^(n-1)+2.
void criterion5() {
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= 5 && ok; ++n) {
        for (int m = 1; m <= 6 && ok; ++m) {
            const Strategy s = erasure_strategy(n, m);
            const GameTrace t = replay(
                PebbleConfig(s.game_length, s.pebbles), s.moves, m - 1);
            const bool bounds =
                t.final.pebbled(m << n) && t.peak_pebbles <= n + 2 &&
                t.erasures_used <= m - 1;
            const bool length =
                n < 1 || static_cast<double>(s.moves.size()) <=
                             2.0 * erasure_time_bound(n, m);
            if (!bounds || !length) {
                ok = false;
                detail = "n=" + std::to_string(n) + " m=" + std::to_string(m);
            }
        }
    }
    report(5, "erasure lemma bounds (n+2 pebbles, m-1 erasures)", ok, detail);
}

// 6. Erasures cannot be deferred to the end of the play.
void criterion6() {
    const Strategy s = erasure_strategy(2, 4);
    std::vector<Move> deferred, tail;
    for (const Move& m : s.moves) {
        if (m.kind == Move::Kind::Erase)
            tail.push_back({Move::Kind::Remove, m.node});
        else
            deferred.push_back(m);
    }
    deferred.insert(deferred.end(), tail.begin(), tail.end());
    bool threw = false;
    int at = -1;
    try {
        replay(PebbleConfig(s.game_length, s.pebbles), deferred, 0);
    } catch (const IllegalMove& e) {
        threw = true;
        at = e.move_index;
    }
    report(6, "deferred erasures make the trace illegal", threw,
           threw ? "IllegalMove at index " + std::to_string(at)
                 : "replay succeeded");
}

// 7. End-to-end reversible simulation on the machine corpus.
void criterion7() {
    const char* machines[] = {corpus::kIncrement, corpus::kEraser,
                              corpus::kSuccessor};
    const char* names[] = {"increment", "eraser", "successor"};
    const char* inputs[] = {"1111111", "0110", "101101"};
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 3 && ok; ++i) {
        const MachineSpec spec = MachineSpec::parse(machines[i]);
        const RunResult direct = run(spec, inputs[i], 1000000);
        const Plan p = plan(direct.steps, direct.cells_visited,
                            PlanMode::MinSpace);
        const SimOutcome out = simulate_with_strategy(spec, inputs[i],
                                                      p.strategy,
                                                      p.segment_length);
        const long long segments =
            (direct.steps + direct.cells_visited - 1) / direct.cells_visited;
        const int bound =
            std::bit_width(static_cast<unsigned long long>(segments));
        if (!out.halted || !(out.final == direct.final) ||
            out.report.bits_erased != 0 ||
            out.report.peak_checkpoints > bound) {
            ok = false;
            detail = names[i];
        }
    }
    report(7, "simulation output equals direct run, zero erased bits", ok,
           detail);
}

// 8. The time exponent is log2(3): bounded ratio against T_G^log3 and
//    successive growth converging to 3.
void criterion8() {
    const MachineSpec inc = MachineSpec::parse(corpus::kIncrement);
    const long long L = 4;
    const double log3 = std::log2(3.0);
    bool ok = true;
    std::string detail;
    std::vector<double> steps;
    for (int n = 3; n <= 8; ++n) {
        const long long tg = (1 << n) - 1;
        const std::string input(static_cast<size_t>((tg * L - 1) / 2), '1');
        const SimOutcome out =
            simulate_with_strategy(inc, input, bennett_pebble(0, n), L);
        const double ratio = static_cast<double>(out.report.simulated_steps) /
                             (std::pow(static_cast<double>(tg), log3) *
                              static_cast<double>(L));
        steps.push_back(static_cast<double>(out.report.simulated_steps));
        if (!out.halted || ratio < 0.3 || ratio > 3.0) {
            ok = false;
            detail = "n=" + std::to_string(n) + " ratio=" + std::to_string(ratio);
        }
    }
    if (ok) {
        const double growth = steps.back() / steps[steps.size() - 2];
        if (growth < 2.7 || growth > 3.3) {
            ok = false;
            detail = "growth at n=8 is " + std::to_string(growth);
        } else {
            detail = "growth at n=8 = " + std::to_string(growth);
        }
    }
    report(8, "simulated steps scale as T_G^log2(3)", ok, detail);
}

// 9. Unknown-T doubling driver stays within 2 * (4 T)^log2(3) segments.
void criterion9() {
    const MachineSpec inc = MachineSpec::parse(corpus::kIncrement);
    const long long L = 10;
    const double log3 = std::log2(3.0);
    const int targets[] = {3, 5, 9, 17};
    const int input_lens[] = {12, 22, 42, 82};  // T = 2*len+1 segments as targeted
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 4 && ok; ++i) {
        const std::string input(static_cast<size_t>(input_lens[i]), '1');
        const RunResult direct = run(inc, input, 100000);
        const long long t_seg = (direct.steps + L - 1) / L;
        if (t_seg != targets[i]) {
            ok = false;
            detail = "bad target sizing";
            break;
        }
        const SimOutcome out = simulate_unknown_T(inc, input, L, 1 << 20);
        const double bound = 2.0 * std::pow(4.0 * t_seg, log3);
        if (!out.halted || !(out.final == direct.final) ||
            static_cast<double>(out.report.segments_computed) > bound) {
            ok = false;
            detail = "T_seg=" + std::to_string(t_seg) + " segments=" +
                     std::to_string(out.report.segments_computed) +
                     " bound=" + std::to_string(bound);
        }
    }
    report(9, "unknown-T driver within 2*(4T)^log2(3)", ok, detail);
}

// 10. Interpreter reversibility: step_back inverts step on 1000 randomized
//     descriptions, and run_logged/unwind round-trips the corpus.
void criterion10() {
    const MachineSpec tog = MachineSpec::parse(corpus::kToggler);
    std::mt19937 rng(20260823);
    bool ok = true;
    std::string detail;
    for (int iter = 0; iter < 1000 && ok; ++iter) {
        InstantDesc d;
        d.state = static_cast<int>(rng() % 2);
        // The window extends a few cells past the rightmost start position
        // so a five-step walk never leaves the written tape.
        for (long long c = -8; c <= 12; ++c)
            d.write(c, 1 + static_cast<int>(rng() % 2));
        d.head = -8 + static_cast<long long>(rng() % 16);
        InstantDesc cur = d;
        for (int s = 0; s < 5 && ok; ++s) {
            const InstantDesc next = step(tog, cur);
            if (!(step_back(tog, next) == cur)) {
                ok = false;
                detail = "step_back mismatch at iteration " + std::to_string(iter);
            }
            cur = next;
        }
    }
    if (ok) {
        const char* machines[] = {corpus::kIncrement, corpus::kEraser,
                                  corpus::kSuccessor};
        const char* inputs[] = {"11111", "0110", "1011"};
        for (int i = 0; i < 3 && ok; ++i) {
            const MachineSpec spec = MachineSpec::parse(machines[i]);
            const LoggedRun lr = run_logged(spec, inputs[i], 100000);
            if (!(unwind(spec, lr.final, lr.log) ==
                  initial_desc(spec, inputs[i]))) {
                ok = false;
                detail = std::string("unwind mismatch on ") + inputs[i];
            }
        }
    }
    report(10, "interpreter reversibility (step_back, run_logged/unwind)", ok,
           detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
