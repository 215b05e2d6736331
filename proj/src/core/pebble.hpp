#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace revsim {

// One step of the game: put a free pebble on a node, take one back, or
// irreversibly erase one (the m-erasure extension).
struct Move {
    enum class Kind { Place, Remove, Erase };
    Kind kind;
    int node;  // 1..game_length

    friend bool operator==(const Move&, const Move&) = default;
};

// Instantaneous description of the game: which of the nodes 1..game_length
// carry a pebble, out of a pool of total_pebbles. Node 0 is implicit and
// permanently pebbled; it is never stored and every legality check treats
// it as occupied.
class PebbleConfig {
public:
    PebbleConfig(int game_length, int total_pebbles);

    int game_length() const { return game_length_; }
    int total_pebbles() const { return total_pebbles_; }

    // True for node 0 and for every occupied node in 1..game_length.
    bool pebbled(int node) const;
    int placed() const { return placed_; }
    int free_pebbles() const { return total_pebbles_ - placed_; }

    std::vector<int> occupied() const;

    // Occupancy as a bitmask, bit (i-1) set iff node i is pebbled.
    // Only valid for game_length <= 63.
    std::uint64_t mask() const;

    // Construct a configuration with the given occupied nodes.
    static PebbleConfig with_occupied(int game_length, int total_pebbles,
                                      const std::vector<int>& nodes);

    friend bool operator==(const PebbleConfig&, const PebbleConfig&) = default;

private:
    friend PebbleConfig apply(const PebbleConfig&, const Move&, int);
    void set(int node, bool on);

    int game_length_;
    int total_pebbles_;
    int placed_ = 0;
    std::vector<char> occ_;  // occ_[i-1] for node i
};

// Result of replaying a move sequence.
struct GameTrace {
    PebbleConfig initial;
    PebbleConfig final;
    std::vector<Move> moves;
    int peak_pebbles = 0;    // max placed count attained
    int erasures_used = 0;
};

bool is_legal(const PebbleConfig& config, const Move& move,
              int erasure_budget_remaining);

// Applies a single move; throws IllegalMove on a rule violation.
PebbleConfig apply(const PebbleConfig& config, const Move& move,
                   int erasure_budget_remaining);

// Applies moves in order from `initial`; throws IllegalMove carrying the
// index of the first offending move.
GameTrace replay(const PebbleConfig& initial, const std::vector<Move>& moves,
                 int erasure_budget);

// Place<->Remove swap in reversed order; throws NotReversible if the input
// contains an Erase (erasure has no inverse).
std::vector<Move> reverse_moves(const std::vector<Move>& moves);

// Trace interchange format: header `game T_G=<int> n=<int> budget=<int>`
// followed by one `P <i>` / `R <i>` / `E <i>` line per move.
struct TraceFile {
    int game_length;
    int total_pebbles;
    int erasure_budget;
    std::vector<Move> moves;
};

std::string format_trace(const TraceFile& trace);
TraceFile parse_trace(const std::string& text);

}  // namespace revsim
