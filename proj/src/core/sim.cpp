#include "core/sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace revsim {

InstantDesc advance_segment(const MachineSpec& spec, const InstantDesc& from,
                            long long segment_length, long long* steps_taken,
                            bool* halted, std::set<long long>* visited) {
    if (spec.is_halt(from.state)) {
        if (steps_taken) *steps_taken = 0;
        if (halted) *halted = true;
        return from;
    }
    InstantDesc d = from;
    std::vector<int> log;
    const long long taken = steps_logged(spec, d, segment_length, log, visited);
    // The history is transient: unwinding it must land exactly on `from`,
    // leaving the advanced description as the only persistent product.
    InstantDesc back = unwind(spec, d, log);
    if (!(back == from))
        throw CorruptLog("segment history did not unwind to its origin");
    if (steps_taken) *steps_taken = taken;
    if (halted) *halted = spec.is_halt(d.state);
    return d;
}

namespace {

class Interpreter {
public:
    Interpreter(const MachineSpec& spec, const std::string& input,
                long long segment_length)
        : spec_(spec), segment_length_(segment_length) {
        if (segment_length < 0)
            throw InvalidParameters("segment_length must be >= 0");
        const long long alpha =
            static_cast<long long>(spec.alphabet().size());
        bits_per_symbol_ = std::max<long long>(
            1, std::bit_width(static_cast<unsigned long long>(alpha - 1)));
        InstantDesc init = initial_desc(spec_, input);
        visited_.insert(init.head);
        if (spec_.is_halt(init.state)) {
            halted_ = true;
            halt_desc_ = init;
        }
        slots_.emplace(0, std::move(init));
    }

    // Runs one move sequence against a fresh mirror game of the given size.
    // The checkpoint store, accounting and event log persist across calls.
    void run_moves(const std::vector<Move>& moves, int game_length,
                   int pebbles, int budget) {
        // Mirror whatever the store already holds (continuation runs).
        PebbleConfig mirror =
            PebbleConfig::with_occupied(game_length, pebbles, occupied_nodes());
        for (size_t i = 0; i < moves.size(); ++i) {
            const Move& m = moves[i];
            try {
                mirror = apply(mirror, m, budget);
            } catch (const IllegalMove& e) {
                throw IllegalMove(std::string(e.what()) + " (at move index " +
                                      std::to_string(i) + ")",
                                  static_cast<int>(i));
            }
            if (m.kind == Move::Kind::Erase) --budget;
            interpret(m);
            ++report_.wall_moves;
            if (static_cast<int>(slots_.size()) - 1 !=
                mirror.placed())
                throw MissingCheckpoint("store and game fell out of lockstep");
        }
    }

    SimOutcome outcome() {
        SimOutcome out;
        // Each erased checkpoint is charged one full block: the space of the
        // run times the symbol width, plus the fixed head/state overhead.
        report_.bits_erased = report_.erasures * checkpoint_bits();
        out.report = report_;
        out.halted = halted_;
        out.halt_node = halt_node_;
        out.halt_offset = halt_offset_;
        if (halted_) {
            out.final = halt_desc_;
        } else {
            out.final = slots_.rbegin()->second;
        }
        std::ostringstream rep;
        rep << "REPORT simulated_steps=" << report_.simulated_steps
            << " segments_computed=" << report_.segments_computed
            << " segments_recomputed=" << report_.segments_recomputed
            << " peak_checkpoints=" << report_.peak_checkpoints
            << " erasures=" << report_.erasures
            << " bits_erased=" << report_.bits_erased
            << " wall_moves=" << report_.wall_moves << "\n";
        out.event_log = log_.str() + rep.str();
        return out;
    }

    bool halted() const { return halted_; }
    int halt_node() const { return halt_node_; }

    // After a failed attempt the reversed strategy must have restored the
    // store to the initial checkpoint alone.
    void reset_attempt() {
        if (slots_.size() != 1 || slots_.begin()->first != 0)
            throw MissingCheckpoint("undo phase left checkpoints behind");
        halted_ = false;
        halt_node_ = 0;
        halt_offset_ = 0;
    }

private:
    std::vector<int> occupied_nodes() const {
        std::vector<int> out;
        for (const auto& [node, desc] : slots_)
            if (node != 0) out.push_back(node);
        return out;
    }

    long long checkpoint_bits() const {
        return static_cast<long long>(visited_.size()) * bits_per_symbol_ +
               kCheckpointOverheadBits;
    }

    const InstantDesc& slot(int node) {
        auto it = slots_.find(node);
        if (it == slots_.end())
            throw MissingCheckpoint("no checkpoint at node " +
                                    std::to_string(node));
        return it->second;
    }

    InstantDesc compute_segment(int node) {
        const InstantDesc& from = slot(node - 1);
        long long steps = 0;
        bool halted = false;
        InstantDesc d = advance_segment(spec_, from, segment_length_, &steps,
                                        &halted, &visited_);
        report_.simulated_steps += steps;
        if (steps > 0) ++report_.segments_computed;
        log_ << "SEG " << node << " steps=" << steps << "\n";
        if (halted && !halted_) {
            halted_ = true;
            halt_node_ = node;
            halt_offset_ = steps;
            halt_desc_ = d;
            log_ << "HALT node=" << node << " offset=" << steps << "\n";
        }
        return d;
    }

    void interpret(const Move& m) {
        switch (m.kind) {
        case Move::Kind::Place: {
            log_ << "MOVE P " << m.node << "\n";
            slots_.emplace(m.node, compute_segment(m.node));
            report_.peak_checkpoints =
                std::max(report_.peak_checkpoints,
                         static_cast<int>(slots_.size()) - 1);
            break;
        }
        case Move::Kind::Remove: {
            log_ << "MOVE R " << m.node << "\n";
            // Reversible cancellation: the checkpoint is recomputable from
            // its predecessor, so deleting it destroys no information.
            InstantDesc again = compute_segment(m.node);
            ++report_.segments_recomputed;
            if (!(again == slot(m.node)))
                throw CancelMismatch("recomputation disagrees with checkpoint at node " +
                                     std::to_string(m.node));
            slots_.erase(m.node);
            break;
        }
        case Move::Kind::Erase: {
            log_ << "MOVE E " << m.node << "\n";
            slot(m.node);  // must exist
            slots_.erase(m.node);
            ++report_.erasures;
            break;
        }
        }
    }

    const MachineSpec& spec_;
    long long segment_length_;
    long long bits_per_symbol_;
    std::map<int, InstantDesc> slots_;
    std::set<long long> visited_;
    ResourceReport report_;
    bool halted_ = false;
    int halt_node_ = 0;
    long long halt_offset_ = 0;
    InstantDesc halt_desc_;
    std::ostringstream log_;
};

}  // namespace

SimOutcome simulate_with_strategy(const MachineSpec& spec,
                                  const std::string& input,
                                  const Strategy& strategy,
                                  long long segment_length) {
    if (strategy.start != 0)
        throw InvalidParameters("strategy must be anchored at node 0");
    Interpreter interp(spec, input, segment_length);
    interp.run_moves(strategy.moves, strategy.game_length, strategy.pebbles,
                     strategy.erasures);
    return interp.outcome();
}

SimOutcome simulate_unknown_T(const MachineSpec& spec, const std::string& input,
                              long long segment_length,
                              long long max_t_segments) {
    Interpreter interp(spec, input, segment_length);
    for (long long t = 2;; t *= 2) {
        if (t > max_t_segments)
            throw CapExceeded("no halt within " +
                              std::to_string(max_t_segments) + " segments");
        // Smallest Bennett game covering t segments.
        const int n =
            std::bit_width(static_cast<unsigned long long>(t));
        const Strategy strat = bennett_pebble(0, n);
        interp.run_moves(strat.moves, strat.game_length, strat.pebbles, 0);
        if (interp.halted() && interp.halt_node() <= t) break;
        // Too short: undo everything and double the attempt size.
        interp.run_moves(reverse_moves(strat.moves), strat.game_length,
                         strat.pebbles, 0);
        interp.reset_attempt();
    }
    return interp.outcome();
}

Plan plan(long long total_steps, long long space, PlanMode mode, int k) {
    if (total_steps < 1 || space < 1)
        throw InvalidParameters("plan: T and S must be positive");
    const long long segments = (total_steps + space - 1) / space;
    const int n = std::bit_width(static_cast<unsigned long long>(segments));
    Plan p;
    p.segment_length = space;
    p.pebble_depth = n;
    switch (mode) {
    case PlanMode::MinSpace:
        p.strategy = bennett_pebble(0, n);
        p.predicted.peak_checkpoints = n;
        break;
    case PlanMode::Erasure: {
        if (k < 1 || k >= n)
            throw InvalidParameters("plan: need 1 <= k < n for the erasure mode");
        const int m = 1 << (k + 2);
        p.strategy = erasure_strategy(n - k, m);
        p.predicted.peak_checkpoints = (n - k) + 2;
        p.predicted.erasures = std::max(0, m - 2);
        break;
    }
    }
    p.predicted.segments_computed =
        static_cast<long long>(p.strategy.moves.size());
    return p;
}

}  // namespace revsim
