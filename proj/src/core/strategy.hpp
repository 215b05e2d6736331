#pragma once

#include <string>
#include <vector>

#include "core/pebble.hpp"

namespace revsim {

// A legality-checked move sequence with its resource envelope. The declared
// fields are verified against an actual replay at construction time.
struct Strategy {
    std::vector<Move> moves;
    int game_length;   // T_G the strategy plays on
    int pebbles;       // pool size it needs
    int erasures;      // Erase moves used
    int peak;          // peak simultaneous pebbles over the replay
    int start = 0;     // context node assumed pebbled (0 for standalone play)
};

// Bennett's mutually recursive pebbling scheme. Starting from node s pebbled
// (s = 0 for the fixed pebble), places depth pebbles on nodes
// s+2^(depth-1), s+2^(depth-1)+2^(depth-2), ..., s+2^depth-1.
Strategy bennett_pebble(int start, int depth);

// Exact inverse of bennett_pebble: empties the segment (start, start+2^depth-1].
Strategy bennett_unpebble(int start, int depth);

// Board moves in bennett_pebble(0, n): (3^n - 1) / 2.
long long move_count(int depth);

// The recurrence t(n) = 3 t(n-1) + 1 with t(0) = 1, closed form
// (3^(n+1) - 1) / 2. Counts one base-case unit per leaf that is not a board
// move, hence one recursion level above move_count. Both are exposed.
long long paper_step_count(int depth);

// Highest node any n-pebble erasure-free strategy can reach: 2^n - 1.
long long max_reachable(int pebbles);

// Springboard procedure: wins a game of length m * 2^depth with depth+2
// pebbles and at most m-1 erasures (realized max(0, m-2): the erase of the
// springboard on node 0 is skipped, that pebble is permanent).
Strategy erasure_strategy(int depth, int m);

// Approximate winning-play length of erasure_strategy: 2m * 3^(depth-1) + 2.
double erasure_time_bound(int depth, int m);

// One row of the space-vs-erasure exchange for a game of length 2^n - 1:
// give up k pebbles, pay 2^(k+2) - 1 erased checkpoint blocks.
struct TradeoffRow {
    int k;
    long long space_blocks;       // n - k, in units of S
    long long erased_bits_blocks; // 2^(k+2) - 1, in units of S
    double time_bound;            // 2^((k+1)(1-log2 3)+1) * (2^n-1)^(log2 3), in units of S
};

std::vector<TradeoffRow> tradeoff_table(int n, int k_min, int k_max);

// CSV export, header `k,space_blocks,erased_bits_blocks,time_bound`.
std::string tradeoff_csv(const std::vector<TradeoffRow>& rows);

// Pebbles sufficient when E erasures are allowed (E odd, >= 1):
// n - floor(log2(E+1)).
int erasure_pebble_bound(int pebbles, long long erasures_allowed);

// Serialize a strategy in the trace interchange format.
std::string strategy_to_trace(const Strategy& s);

}  // namespace revsim
