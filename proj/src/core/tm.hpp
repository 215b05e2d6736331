#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace revsim {

// One machine rule. Read/write form: in state `from` scanning `read`, write
// `write` and enter `to`. Move form: in state `from`, shift the head by
// `shift` regardless of the scanned symbol and enter `to`.
struct Quadruple {
    int from;
    int to;
    bool is_move;
    int read = -1;   // symbol ids, read/write form only
    int write = -1;
    int shift = 0;   // -1, 0, +1, move form only

    friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

class MachineSpec {
public:
    // Parses the line-oriented machine format:
    //   states: p q h
    //   alphabet: _ 0 1        (first symbol is the blank)
    //   start: p
    //   halt: h
    //   p 0 1 q                (read/write)
    //   q * R p                (move, L|N|R)
    static MachineSpec parse(const std::string& text);

    std::string canonical() const;

    const std::vector<std::string>& states() const { return states_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    const std::vector<Quadruple>& quadruples() const { return quads_; }
    int start_state() const { return start_; }
    bool is_halt(int state) const { return halt_.count(state) > 0; }

    const std::string& state_name(int id) const { return states_[static_cast<size_t>(id)]; }
    const std::string& symbol_name(int id) const { return alphabet_[static_cast<size_t>(id)]; }
    int blank() const { return 0; }

private:
    std::vector<std::string> states_;
    std::vector<std::string> alphabet_;
    std::vector<Quadruple> quads_;
    int start_ = -1;
    std::set<int> halt_;
};

// Full machine snapshot. The tape stores no explicit blanks, so equality of
// descriptions is plain structural equality.
struct InstantDesc {
    std::map<long long, int> tape;
    long long head = 0;
    int state = 0;

    int read(long long cell) const {
        auto it = tape.find(cell);
        return it == tape.end() ? 0 : it->second;
    }
    void write(long long cell, int symbol) {
        if (symbol == 0) tape.erase(cell);
        else tape[cell] = symbol;
    }

    friend bool operator==(const InstantDesc&, const InstantDesc&) = default;
};

// Initial description: input symbols on cells 0..len-1, head at 0, start
// state. Each input character must name a single-character alphabet symbol.
InstantDesc initial_desc(const MachineSpec& spec, const std::string& input);

// Rendered tape contents between the lowest and highest non-blank cell.
std::string tape_to_string(const MachineSpec& spec, const InstantDesc& d);

// nullopt when no two quadruples overlap in domain; otherwise the indices of
// an offending pair.
std::optional<std::pair<int, int>> check_deterministic(const MachineSpec& spec);

// nullopt when no two quadruples overlap in range (the machine is
// reversible); otherwise an offending pair.
std::optional<std::pair<int, int>> check_reversible(const MachineSpec& spec);

// Indices of quadruples whose range overlaps some other quadruple's range.
std::set<int> irreversible_quadruples(const MachineSpec& spec);

// Index of the unique applicable quadruple; throws NoApplicableQuadruple.
int applicable_quadruple(const MachineSpec& spec, const InstantDesc& d);

InstantDesc step(const MachineSpec& spec, const InstantDesc& d);

struct RunResult {
    InstantDesc final;
    long long steps = 0;
    long long cells_visited = 0;  // distinct head positions, the space S
};

RunResult run(const MachineSpec& spec, const std::string& input,
              long long step_cap);

// Unique predecessor of a non-initial description; requires a reversible
// machine (no range overlap makes the inverse single-valued).
InstantDesc step_back(const MachineSpec& spec, const InstantDesc& d);

struct LoggedRun {
    InstantDesc final;
    std::vector<int> log;  // quadruple index per executed step
    long long cells_visited = 0;
};

LoggedRun run_logged(const MachineSpec& spec, const std::string& input,
                     long long step_cap);

// Forward steps from `d`, appending to `log`; stops at a halt state or after
// max_steps. Returns steps taken; visited (when non-null) collects head cells.
long long steps_logged(const MachineSpec& spec, InstantDesc& d,
                       long long max_steps, std::vector<int>& log,
                       std::set<long long>* visited);

// Pops the whole log, undoing each quadruple's effect; ends in the
// description the run started from. Throws CorruptLog on inconsistency.
InstantDesc unwind(const MachineSpec& spec, InstantDesc d, std::vector<int> log);

struct IrreversibleCount {
    long long irreversible_steps = 0;  // I
    long long total_steps = 0;         // T
};

IrreversibleCount count_irreversible_steps(const MachineSpec& spec,
                                           const std::string& input,
                                           long long step_cap);

}  // namespace revsim
