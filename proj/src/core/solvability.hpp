#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "core/pebble.hpp"

namespace revsim {

// Occupied nodes that currently have another pebble (node 0 included) at
// most 2^f positions to their left, f being the free-pebble count. Such a
// pebble can be retrieved with the free pebbles in one big step.
std::vector<int> available_pebbles(const PebbleConfig& config);

struct SolveResult {
    bool solvable = false;
    std::vector<int> removal_order;  // witness when solvable
};

// Greedy decision procedure: repeatedly remove an available pebble until
// the board is empty or stuck. Any tie-breaking rule is correct (weak and
// strong solvability coincide); the default removes the highest node.
SolveResult is_weakly_solvable(const PebbleConfig& config);

// Same, with a caller-supplied choice among the available pebbles. Used by
// the randomized confluence tests.
SolveResult is_weakly_solvable_with(
    const PebbleConfig& config,
    const std::function<size_t(const std::vector<int>&)>& pick);

// Searches every removal order; true iff all maximal sequences empty the
// board. Test oracle only, exponential without the memo.
bool is_strongly_solvable_exhaustive(const PebbleConfig& config);

// Map from occupied node to rank in {f, ..., n-1}.
using Numbering = std::map<int, int>;

// True iff every placed pebble of rank i has a higher-ranked pebble (node 0
// ranks above everything) at most 2^i positions to its left.
bool check_numbering(const PebbleConfig& config, const Numbering& numbering);

// Ranks f, f+1, ... assigned in order of removal.
Numbering numbering_from_removal_order(const PebbleConfig& config,
                                       const std::vector<int>& order);

// A configuration is reachable from the empty board iff it is weakly
// solvable: the removal witness run backwards is a construction.
bool is_realizable(const PebbleConfig& config);

struct ReachableSet {
    int game_length;
    int total_pebbles;
    std::vector<std::uint64_t> configs;  // sorted occupancy masks, bit i-1 = node i

    bool contains(std::uint64_t mask) const;
    // Highest pebbled node over all members, 0 if only the empty config.
    int max_node() const;
};

inline constexpr int kEnumerationCap = 16;

// Breadth-first closure of the empty configuration under legal Place/Remove
// moves. Throws InstanceTooLarge beyond the cap.
ReachableSet enumerate_reachable(int game_length, int total_pebbles,
                                 int cap = kEnumerationCap);

// Compact config text form `f=<int>;occ=<i1,i2,...>`.
std::string format_config(const PebbleConfig& config);

}  // namespace revsim
