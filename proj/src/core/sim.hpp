#pragma once

#include <map>
#include <set>
#include <string>

#include "core/strategy.hpp"
#include "core/tm.hpp"

namespace revsim {

// Fixed per-checkpoint overhead on top of the tape payload: 64 bits for the
// head position plus 32 bits for the control state. Keeps bits_erased
// deterministic across runs.
inline constexpr long long kCheckpointOverheadBits = 96;

struct ResourceReport {
    long long simulated_steps = 0;      // forward base-machine steps, recomputations included
    long long segments_computed = 0;    // forward segment computations (full or partial)
    long long segments_recomputed = 0;  // the subset triggered by Remove
    long long wall_moves = 0;           // pebble moves interpreted
    long long erasures = 0;
    long long bits_erased = 0;
    int peak_checkpoints = 0;           // max stored checkpoints, node 0 excluded
};

struct SimOutcome {
    InstantDesc final;
    ResourceReport report;
    bool halted = false;
    int halt_node = 0;        // game node whose checkpoint holds the halt
    long long halt_offset = 0;  // steps into that segment
    std::string event_log;
};

// Runs up to `segment_length` forward steps (stopping at a halt state) with
// a transient history: the run is logged, the result copied out, and the
// log unwound back to `from` to certify nothing but the result survives.
InstantDesc advance_segment(const MachineSpec& spec, const InstantDesc& from,
                            long long segment_length, long long* steps_taken,
                            bool* halted, std::set<long long>* visited);

// Interprets a pebble strategy over a checkpoint store: Place computes the
// next checkpoint from its predecessor, Remove recomputes it and cancels it
// after an equality check, Erase deletes it outright and charges the erased
// bits. The store and the mirrored game stay in lockstep.
SimOutcome simulate_with_strategy(const MachineSpec& spec,
                                  const std::string& input,
                                  const Strategy& strategy,
                                  long long segment_length);

// Doubling driver for unknown running time: attempt t = 2, 4, 8, ...
// segments with a Bennett strategy covering t; on failure, replay the exact
// reversal to restore the initial-only store and double t. Accounting
// accumulates across attempts.
SimOutcome simulate_unknown_T(const MachineSpec& spec, const std::string& input,
                              long long segment_length,
                              long long max_t_segments);

enum class PlanMode { MinSpace, Erasure };

struct Plan {
    Strategy strategy;
    long long segment_length;
    int pebble_depth;  // the n of the sizing
    ResourceReport predicted;
};

// Sizes a strategy for a run of T steps in S space. MinSpace: Bennett with
// n = ceil(log2(T/S + 1)) pebbles. Erasure(k): springboard strategy with
// n-k bridge pebbles and 2^(k+2) blocks.
Plan plan(long long total_steps, long long space, PlanMode mode, int k = 0);

}  // namespace revsim
