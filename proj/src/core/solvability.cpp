#include "core/solvability.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

namespace revsim {

namespace {

// Working copy of an occupancy pattern for the removal procedures.
struct Board {
    int game_length;
    int total_pebbles;
    std::vector<char> occ;  // occ[i-1] for node i
    int placed;

    explicit Board(const PebbleConfig& c)
        : game_length(c.game_length()), total_pebbles(c.total_pebbles()),
          occ(static_cast<size_t>(c.game_length()), 0), placed(c.placed()) {
        for (int i : c.occupied()) occ[static_cast<size_t>(i - 1)] = 1;
    }

    bool pebbled(int node) const {
        return node == 0 || (node >= 1 && node <= game_length &&
                             occ[static_cast<size_t>(node - 1)]);
    }

    int free() const { return total_pebbles - placed; }

    void remove(int node) {
        occ[static_cast<size_t>(node - 1)] = 0;
        --placed;
    }

    void put_back(int node) {
        occ[static_cast<size_t>(node - 1)] = 1;
        ++placed;
    }

    std::vector<int> available() const {
        // Reach 2^f to the left; clamp the shift so large pools cannot overflow.
        const int f = free();
        const long long reach =
            f >= 62 ? static_cast<long long>(game_length) + 1 : (1LL << f);
        std::vector<int> out;
        for (int i = 1; i <= game_length; ++i) {
            if (!occ[static_cast<size_t>(i - 1)]) continue;
            const int lo = static_cast<int>(std::max<long long>(0, i - reach));
            for (int u = i - 1; u >= lo; --u) {
                if (pebbled(u)) {
                    out.push_back(i);
                    break;
                }
            }
        }
        return out;
    }
};

bool strongly_solvable_rec(Board& b,
                           std::unordered_map<std::uint64_t, bool>& memo) {
    if (b.placed == 0) return true;
    std::uint64_t key = 0;
    for (int i = 1; i <= b.game_length; ++i)
        if (b.occ[static_cast<size_t>(i - 1)]) key |= std::uint64_t{1} << (i - 1);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::vector<int> avail = b.available();
    bool ok = !avail.empty();
    for (int node : avail) {
        if (!ok) break;
        b.remove(node);
        ok = strongly_solvable_rec(b, memo);
        b.put_back(node);
    }
    memo.emplace(key, ok);
    return ok;
}

}  // namespace

std::vector<int> available_pebbles(const PebbleConfig& config) {
    return Board(config).available();
}

SolveResult is_weakly_solvable_with(
    const PebbleConfig& config,
    const std::function<size_t(const std::vector<int>&)>& pick) {
    Board b(config);
    SolveResult res;
    while (b.placed > 0) {
        const std::vector<int> avail = b.available();
        if (avail.empty()) return SolveResult{false, {}};
        const int node = avail[pick(avail)];
        b.remove(node);
        res.removal_order.push_back(node);
    }
    res.solvable = true;
    return res;
}

SolveResult is_weakly_solvable(const PebbleConfig& config) {
    return is_weakly_solvable_with(
        config, [](const std::vector<int>& avail) { return avail.size() - 1; });
}

bool is_strongly_solvable_exhaustive(const PebbleConfig& config) {
    if (config.game_length() > 63)
        throw InstanceTooLarge("exhaustive oracle requires game_length <= 63");
    Board b(config);
    std::unordered_map<std::uint64_t, bool> memo;
    return strongly_solvable_rec(b, memo);
}

bool check_numbering(const PebbleConfig& config, const Numbering& numbering) {
    const std::vector<int> occ = config.occupied();
    if (numbering.size() != occ.size()) return false;
    const int f = config.free_pebbles();
    const int n = config.total_pebbles();
    // Ranks must exactly cover {f, ..., n-1} over the occupied nodes.
    std::vector<char> seen(static_cast<size_t>(std::max(0, n - f)), 0);
    for (const auto& [node, rank] : numbering) {
        if (!config.pebbled(node) || node == 0) return false;
        if (rank < f || rank >= n) return false;
        if (seen[static_cast<size_t>(rank - f)]) return false;
        seen[static_cast<size_t>(rank - f)] = 1;
    }
    for (const auto& [node, rank] : numbering) {
        const long long reach = rank >= 62 ? static_cast<long long>(node) : (1LL << rank);
        bool ok = false;
        const int lo = static_cast<int>(std::max<long long>(0, node - reach));
        for (int u = node - 1; u >= lo && !ok; --u) {
            if (u == 0) {
                ok = true;  // the fixed pebble ranks above everything
            } else if (auto it = numbering.find(u);
                       it != numbering.end() && it->second > rank) {
                ok = true;
            }
        }
        if (!ok) return false;
    }
    return true;
}

Numbering numbering_from_removal_order(const PebbleConfig& config,
                                       const std::vector<int>& order) {
    Numbering num;
    int rank = config.free_pebbles();
    for (int node : order) num[node] = rank++;
    return num;
}

bool is_realizable(const PebbleConfig& config) {
    return is_weakly_solvable(config).solvable;
}

bool ReachableSet::contains(std::uint64_t mask) const {
    return std::binary_search(configs.begin(), configs.end(), mask);
}

int ReachableSet::max_node() const {
    int best = 0;
    for (std::uint64_t m : configs)
        if (m) best = std::max(best, 64 - std::countl_zero(m));
    return best;
}

ReachableSet enumerate_reachable(int game_length, int total_pebbles, int cap) {
    if (game_length > cap)
        throw InstanceTooLarge("enumeration cap of " + std::to_string(cap) +
                               " nodes exceeded");
    if (game_length < 1 || total_pebbles < 0)
        throw InvalidParameters("bad enumeration parameters");

    const int T = game_length;
    const int n = total_pebbles;
    std::vector<char> visited(std::size_t{1} << T, 0);
    std::vector<std::uint64_t> frontier{0};
    visited[0] = 1;
    std::vector<std::uint64_t> out{0};

    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t m : frontier) {
            const int placed = std::popcount(m);
            for (int i = 1; i <= T; ++i) {
                const bool prev = (i == 1) || (m >> (i - 2)) & 1;
                if (!prev) continue;
                const std::uint64_t bit = std::uint64_t{1} << (i - 1);
                std::uint64_t succ;
                if (m & bit) {
                    succ = m & ~bit;  // Remove(i)
                } else if (placed < n) {
                    succ = m | bit;   // Place(i)
                } else {
                    continue;
                }
                if (!visited[succ]) {
                    visited[succ] = 1;
                    next.push_back(succ);
                    out.push_back(succ);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return ReachableSet{game_length, total_pebbles, std::move(out)};
}

std::string format_config(const PebbleConfig& config) {
    std::ostringstream os;
    os << "f=" << config.free_pebbles() << ";occ=";
    const std::vector<int> occ = config.occupied();
    for (size_t i = 0; i < occ.size(); ++i) {
        if (i) os << ",";
        os << occ[i];
    }
    return os.str();
}

}  // namespace revsim
