#include "core/strategy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace revsim {

namespace {

void emit_pebble(int s, int n, std::vector<Move>& out);

void emit_unpebble(int s, int n, std::vector<Move>& out) {
    if (n == 0) return;
    const int t = s + (1 << (n - 1));
    emit_unpebble(t, n - 1, out);
    emit_pebble(s, n - 1, out);
    out.push_back({Move::Kind::Remove, t});
    emit_unpebble(s, n - 1, out);
}

void emit_pebble(int s, int n, std::vector<Move>& out) {
    if (n == 0) return;
    const int t = s + (1 << (n - 1));
    emit_pebble(s, n - 1, out);
    out.push_back({Move::Kind::Place, t});
    emit_unpebble(s, n - 1, out);
    emit_pebble(t, n - 1, out);
}

// Fill in peak/erasures. Strategies anchored at node 0 are verified by a
// real replay; fragments anchored deeper only count pebbles above their
// context (the caller provides the context when composing them).
Strategy finalize(std::vector<Move> moves, int game_length, int pebbles,
                  int budget, int start) {
    Strategy s;
    s.moves = std::move(moves);
    s.game_length = game_length;
    s.pebbles = pebbles;
    s.start = start;
    if (start == 0) {
        const GameTrace t =
            replay(PebbleConfig(game_length, pebbles), s.moves, budget);
        s.peak = t.peak_pebbles;
        s.erasures = t.erasures_used;
    } else {
        int placed = 0, peak = 0, erasures = 0;
        for (const Move& m : s.moves) {
            placed += m.kind == Move::Kind::Place ? 1 : -1;
            if (m.kind == Move::Kind::Erase) ++erasures;
            peak = std::max(peak, placed);
        }
        s.peak = peak;
        s.erasures = erasures;
    }
    return s;
}

}  // namespace

Strategy bennett_pebble(int start, int depth) {
    if (start < 0 || depth < 0)
        throw InvalidParameters("bennett_pebble: start and depth must be >= 0");
    if (depth > 30)
        throw InvalidParameters("bennett_pebble: depth too large");
    std::vector<Move> moves;
    emit_pebble(start, depth, moves);
    const int length = std::max(1, start + (1 << depth) - 1);
    return finalize(std::move(moves), length, depth, 0, start);
}

Strategy bennett_unpebble(int start, int depth) {
    if (start < 0 || depth < 0)
        throw InvalidParameters("bennett_unpebble: start and depth must be >= 0");
    if (depth > 30)
        throw InvalidParameters("bennett_unpebble: depth too large");
    std::vector<Move> moves;
    emit_unpebble(start, depth, moves);
    Strategy s;
    s.moves = std::move(moves);
    s.game_length = std::max(1, start + (1 << depth) - 1);
    s.pebbles = depth;
    s.start = start;
    s.erasures = 0;
    s.peak = depth;  // mirror image of the pebbling phase
    return s;
}

long long move_count(int depth) {
    if (depth < 0) throw InvalidParameters("move_count: depth must be >= 0");
    long long pow3 = 1;
    for (int i = 0; i < depth; ++i) pow3 *= 3;
    return (pow3 - 1) / 2;
}

long long paper_step_count(int depth) {
    if (depth < 0) throw InvalidParameters("paper_step_count: depth must be >= 0");
    return move_count(depth + 1);
}

long long max_reachable(int pebbles) {
    if (pebbles < 0 || pebbles > 62)
        throw InvalidParameters("max_reachable: pebbles out of range");
    return (1LL << pebbles) - 1;
}

Strategy erasure_strategy(int depth, int m) {
    if (depth < 0 || m < 1)
        throw InvalidParameters("erasure_strategy: need depth >= 0, m >= 1");
    if (depth > 24 || static_cast<long long>(m) << depth > (1 << 26))
        throw InvalidParameters("erasure_strategy: instance too large");
    const int block = 1 << depth;
    std::vector<Move> moves;
    for (int i = 0; i < m; ++i) {
        emit_pebble(i * block, depth, moves);
        moves.push_back({Move::Kind::Place, (i + 1) * block});
        emit_unpebble(i * block, depth, moves);
        // Drop the trailing springboard, except the permanent pebble on 0.
        // Node 1 sits next to it, so a plain removal works there and the
        // erasure budget is saved for nodes that actually need it.
        if (i < m - 1 && i > 0)
            moves.push_back({i * block == 1 ? Move::Kind::Remove
                                            : Move::Kind::Erase,
                             i * block});
    }
    return finalize(std::move(moves), m * block, depth + 2, m - 1, 0);
}

double erasure_time_bound(int depth, int m) {
    if (depth < 1 || m < 1)
        throw InvalidParameters("erasure_time_bound: need depth >= 1, m >= 1");
    return 2.0 * m * std::pow(3.0, depth - 1) + 2.0;
}

std::vector<TradeoffRow> tradeoff_table(int n, int k_min, int k_max) {
    if (k_min < 1 || k_min > k_max || k_max >= n)
        throw InvalidParameters("tradeoff_table: need 1 <= k_min <= k_max < n");
    const double log3 = std::log2(3.0);
    const double segments = std::pow(2.0, n) - 1.0;  // T/S for T = (2^n - 1)S
    std::vector<TradeoffRow> rows;
    for (int k = k_min; k <= k_max; ++k) {
        TradeoffRow row;
        row.k = k;
        row.space_blocks = n - k;
        row.erased_bits_blocks = (1LL << (k + 2)) - 1;
        row.time_bound = std::pow(2.0, (k + 1) * (1.0 - log3) + 1.0) *
                         std::pow(segments, log3);
        rows.push_back(row);
    }
    return rows;
}

std::string tradeoff_csv(const std::vector<TradeoffRow>& rows) {
    std::string out = "k,space_blocks,erased_bits_blocks,time_bound\n";
    char buf[128];
    for (const TradeoffRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%lld,%lld,%.6g\n", r.k,
                      r.space_blocks, r.erased_bits_blocks, r.time_bound);
        out += buf;
    }
    return out;
}

int erasure_pebble_bound(int pebbles, long long erasures_allowed) {
    if (erasures_allowed < 1 || erasures_allowed % 2 == 0)
        throw InvalidParameters("erasure_pebble_bound: E must be odd and >= 1");
    const int reduction =
        std::bit_width(static_cast<unsigned long long>(erasures_allowed + 1)) - 1;
    return pebbles - reduction;
}

std::string strategy_to_trace(const Strategy& s) {
    return format_trace(TraceFile{s.game_length, s.pebbles, s.erasures, s.moves});
}

}  // namespace revsim
