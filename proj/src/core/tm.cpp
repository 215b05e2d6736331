#include "core/tm.hpp"

#include <algorithm>
#include <sstream>

namespace revsim {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int index_of(const std::vector<std::string>& names, const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

}  // namespace

MachineSpec MachineSpec::parse(const std::string& text) {
    MachineSpec spec;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::string start_name;
    std::vector<std::string> halt_names;
    std::vector<std::vector<std::string>> quad_lines;

    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::vector<std::string> toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string where = "machine line " + std::to_string(lineno);
        if (toks[0] == "states:") {
            spec.states_.assign(toks.begin() + 1, toks.end());
        } else if (toks[0] == "alphabet:") {
            spec.alphabet_.assign(toks.begin() + 1, toks.end());
        } else if (toks[0] == "start:") {
            if (toks.size() != 2) throw ParseError(where + ": start: wants one state");
            start_name = toks[1];
        } else if (toks[0] == "halt:") {
            halt_names.assign(toks.begin() + 1, toks.end());
        } else {
            if (toks.size() != 4)
                throw ParseError(where + ": quadruple wants 4 fields");
            quad_lines.push_back(std::move(toks));
        }
    }

    if (spec.states_.empty()) throw ParseError("machine: missing states:");
    if (spec.alphabet_.empty()) throw ParseError("machine: missing alphabet:");
    spec.start_ = index_of(spec.states_, start_name);
    if (spec.start_ < 0) throw ParseError("machine: unknown start state");
    for (const std::string& h : halt_names) {
        const int id = index_of(spec.states_, h);
        if (id < 0) throw ParseError("machine: unknown halt state `" + h + "`");
        spec.halt_.insert(id);
    }

    for (const auto& toks : quad_lines) {
        Quadruple q{};
        q.from = index_of(spec.states_, toks[0]);
        q.to = index_of(spec.states_, toks[3]);
        if (q.from < 0 || q.to < 0)
            throw ParseError("machine: unknown state in quadruple `" + toks[0] +
                             " ... " + toks[3] + "`");
        if (toks[1] == "*") {
            q.is_move = true;
            if (toks[2] == "L") q.shift = -1;
            else if (toks[2] == "N") q.shift = 0;
            else if (toks[2] == "R") q.shift = +1;
            else throw ParseError("machine: move shift must be L, N or R");
        } else {
            q.is_move = false;
            q.read = index_of(spec.alphabet_, toks[1]);
            q.write = index_of(spec.alphabet_, toks[2]);
            if (q.read < 0 || q.write < 0)
                throw ParseError("machine: unknown symbol in quadruple");
        }
        spec.quads_.push_back(q);
    }
    return spec;
}

std::string MachineSpec::canonical() const {
    std::ostringstream os;
    os << "states:";
    for (const auto& s : states_) os << " " << s;
    os << "\nalphabet:";
    for (const auto& a : alphabet_) os << " " << a;
    os << "\nstart: " << states_[static_cast<size_t>(start_)] << "\nhalt:";
    for (int h : halt_) os << " " << states_[static_cast<size_t>(h)];
    os << "\n";
    for (const Quadruple& q : quads_) {
        os << state_name(q.from) << " ";
        if (q.is_move)
            os << "* " << (q.shift < 0 ? "L" : q.shift > 0 ? "R" : "N");
        else
            os << symbol_name(q.read) << " " << symbol_name(q.write);
        os << " " << state_name(q.to) << "\n";
    }
    return os.str();
}

InstantDesc initial_desc(const MachineSpec& spec, const std::string& input) {
    InstantDesc d;
    d.state = spec.start_state();
    for (size_t i = 0; i < input.size(); ++i) {
        const int sym = index_of(spec.alphabet(), std::string(1, input[i]));
        if (sym < 0)
            throw ParseError(std::string("input symbol `") + input[i] +
                             "` not in alphabet");
        d.write(static_cast<long long>(i), sym);
    }
    return d;
}

std::string tape_to_string(const MachineSpec& spec, const InstantDesc& d) {
    if (d.tape.empty()) return "";
    std::string out;
    const long long lo = d.tape.begin()->first;
    const long long hi = d.tape.rbegin()->first;
    for (long long c = lo; c <= hi; ++c) out += spec.symbol_name(d.read(c));
    return out;
}

namespace {

// Same state, intersecting triggers, different effects.
bool domain_overlap(const Quadruple& a, const Quadruple& b) {
    if (a.from != b.from) return false;
    const bool triggers_meet = a.is_move || b.is_move || a.read == b.read;
    return triggers_meet && !(a == b);
}

// Entering the same state, not backward-distinguishable: only two
// read/write rules writing different symbols avoid the overlap.
bool range_overlap(const Quadruple& a, const Quadruple& b) {
    if (a.to != b.to) return false;
    if (!a.is_move && !b.is_move && a.write != b.write) return false;
    return true;
}

}  // namespace

std::optional<std::pair<int, int>> check_deterministic(const MachineSpec& spec) {
    const auto& qs = spec.quadruples();
    for (size_t i = 0; i < qs.size(); ++i)
        for (size_t j = i + 1; j < qs.size(); ++j)
            if (domain_overlap(qs[i], qs[j]))
                return std::pair<int, int>{static_cast<int>(i), static_cast<int>(j)};
    return std::nullopt;
}

std::optional<std::pair<int, int>> check_reversible(const MachineSpec& spec) {
    const auto& qs = spec.quadruples();
    for (size_t i = 0; i < qs.size(); ++i)
        for (size_t j = i + 1; j < qs.size(); ++j)
            if (range_overlap(qs[i], qs[j]))
                return std::pair<int, int>{static_cast<int>(i), static_cast<int>(j)};
    return std::nullopt;
}

std::set<int> irreversible_quadruples(const MachineSpec& spec) {
    std::set<int> out;
    const auto& qs = spec.quadruples();
    for (size_t i = 0; i < qs.size(); ++i)
        for (size_t j = i + 1; j < qs.size(); ++j)
            if (range_overlap(qs[i], qs[j])) {
                out.insert(static_cast<int>(i));
                out.insert(static_cast<int>(j));
            }
    return out;
}

int applicable_quadruple(const MachineSpec& spec, const InstantDesc& d) {
    const int sym = d.read(d.head);
    const auto& qs = spec.quadruples();
    for (size_t i = 0; i < qs.size(); ++i) {
        const Quadruple& q = qs[i];
        if (q.from != d.state) continue;
        if (q.is_move || q.read == sym) return static_cast<int>(i);
    }
    std::ostringstream os;
    os << "no quadruple applies in state " << spec.state_name(d.state)
       << " scanning " << spec.symbol_name(sym) << " at cell " << d.head;
    throw NoApplicableQuadruple(os.str());
}

static void apply_quadruple(const MachineSpec& spec, InstantDesc& d, int index) {
    const Quadruple& q = spec.quadruples()[static_cast<size_t>(index)];
    if (q.is_move) d.head += q.shift;
    else d.write(d.head, q.write);
    d.state = q.to;
}

InstantDesc step(const MachineSpec& spec, const InstantDesc& d) {
    InstantDesc next = d;
    apply_quadruple(spec, next, applicable_quadruple(spec, d));
    return next;
}

long long steps_logged(const MachineSpec& spec, InstantDesc& d,
                       long long max_steps, std::vector<int>& log,
                       std::set<long long>* visited) {
    long long taken = 0;
    if (visited) visited->insert(d.head);
    while (taken < max_steps && !spec.is_halt(d.state)) {
        const int idx = applicable_quadruple(spec, d);
        apply_quadruple(spec, d, idx);
        log.push_back(idx);
        ++taken;
        if (visited) visited->insert(d.head);
    }
    return taken;
}

RunResult run(const MachineSpec& spec, const std::string& input,
              long long step_cap) {
    InstantDesc d = initial_desc(spec, input);
    std::vector<int> log;
    std::set<long long> visited;
    const long long steps = steps_logged(spec, d, step_cap, log, &visited);
    if (!spec.is_halt(d.state))
        throw StepCapExceeded("run did not halt within " +
                              std::to_string(step_cap) + " steps");
    return RunResult{std::move(d), steps,
                     static_cast<long long>(visited.size())};
}

InstantDesc step_back(const MachineSpec& spec, const InstantDesc& d) {
    if (auto pair = check_reversible(spec))
        throw InvalidParameters("step_back requires a reversible machine");
    const auto& qs = spec.quadruples();
    int found = -1;
    for (size_t i = 0; i < qs.size(); ++i) {
        const Quadruple& q = qs[i];
        if (q.to != d.state) continue;
        if (!q.is_move && d.read(d.head) != q.write) continue;
        found = static_cast<int>(i);
        break;  // reversibility makes the match unique
    }
    if (found < 0)
        throw NoPredecessor("no quadruple can have produced this description");
    const Quadruple& q = qs[static_cast<size_t>(found)];
    InstantDesc prev = d;
    if (q.is_move) prev.head -= q.shift;
    else prev.write(prev.head, q.read);
    prev.state = q.from;
    return prev;
}

LoggedRun run_logged(const MachineSpec& spec, const std::string& input,
                     long long step_cap) {
    InstantDesc d = initial_desc(spec, input);
    std::vector<int> log;
    std::set<long long> visited;
    steps_logged(spec, d, step_cap, log, &visited);
    if (!spec.is_halt(d.state))
        throw StepCapExceeded("run did not halt within " +
                              std::to_string(step_cap) + " steps");
    return LoggedRun{std::move(d), std::move(log),
                     static_cast<long long>(visited.size())};
}

InstantDesc unwind(const MachineSpec& spec, InstantDesc d,
                   std::vector<int> log) {
    while (!log.empty()) {
        const int idx = log.back();
        log.pop_back();
        if (idx < 0 || idx >= static_cast<int>(spec.quadruples().size()))
            throw CorruptLog("log entry out of range");
        const Quadruple& q = spec.quadruples()[static_cast<size_t>(idx)];
        if (d.state != q.to)
            throw CorruptLog("log entry does not match current state");
        if (q.is_move) {
            d.head -= q.shift;
        } else {
            if (d.read(d.head) != q.write)
                throw CorruptLog("log entry does not match scanned symbol");
            d.write(d.head, q.read);
        }
        d.state = q.from;
    }
    return d;
}

IrreversibleCount count_irreversible_steps(const MachineSpec& spec,
                                           const std::string& input,
                                           long long step_cap) {
    const std::set<int> irrev = irreversible_quadruples(spec);
    const LoggedRun r = run_logged(spec, input, step_cap);
    IrreversibleCount out;
    out.total_steps = static_cast<long long>(r.log.size());
    for (int idx : r.log)
        if (irrev.count(idx)) ++out.irreversible_steps;
    return out;
}

}  // namespace revsim
