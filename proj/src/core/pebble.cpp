#include "core/pebble.hpp"

#include <algorithm>
#include <sstream>

namespace revsim {

PebbleConfig::PebbleConfig(int game_length, int total_pebbles)
    : game_length_(game_length), total_pebbles_(total_pebbles),
      occ_(static_cast<size_t>(std::max(game_length, 0)), 0) {
    if (game_length < 1)
        throw InvalidParameters("game_length must be positive");
    if (total_pebbles < 0)
        throw InvalidParameters("total_pebbles must be non-negative");
}

bool PebbleConfig::pebbled(int node) const {
    if (node == 0) return true;
    if (node < 1 || node > game_length_) return false;
    return occ_[static_cast<size_t>(node - 1)] != 0;
}

std::vector<int> PebbleConfig::occupied() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(placed_));
    for (int i = 1; i <= game_length_; ++i)
        if (occ_[static_cast<size_t>(i - 1)]) out.push_back(i);
    return out;
}

std::uint64_t PebbleConfig::mask() const {
    if (game_length_ > 63)
        throw InstanceTooLarge("mask() requires game_length <= 63");
    std::uint64_t m = 0;
    for (int i = 1; i <= game_length_; ++i)
        if (occ_[static_cast<size_t>(i - 1)]) m |= std::uint64_t{1} << (i - 1);
    return m;
}

PebbleConfig PebbleConfig::with_occupied(int game_length, int total_pebbles,
                                         const std::vector<int>& nodes) {
    PebbleConfig c(game_length, total_pebbles);
    for (int i : nodes) {
        if (i < 1 || i > game_length)
            throw InvalidParameters("occupied node out of range");
        c.set(i, true);
    }
    if (c.placed() > total_pebbles)
        throw InvalidParameters("more occupied nodes than pebbles in the pool");
    return c;
}

void PebbleConfig::set(int node, bool on) {
    char& cell = occ_[static_cast<size_t>(node - 1)];
    if (cell != static_cast<char>(on)) {
        cell = static_cast<char>(on);
        placed_ += on ? 1 : -1;
    }
}

bool is_legal(const PebbleConfig& config, const Move& move, int budget) {
    const int i = move.node;
    if (i < 1 || i > config.game_length()) return false;
    switch (move.kind) {
    case Move::Kind::Place:
        return config.pebbled(i - 1) && !config.pebbled(i) &&
               config.free_pebbles() > 0;
    case Move::Kind::Remove:
        return config.pebbled(i - 1) && config.pebbled(i);
    case Move::Kind::Erase:
        // The erasure rule applies to nodes i > 1 only; no condition on i-1.
        return i > 1 && config.pebbled(i) && budget > 0;
    }
    return false;
}

static const char* kind_letter(Move::Kind k) {
    switch (k) {
    case Move::Kind::Place: return "P";
    case Move::Kind::Remove: return "R";
    case Move::Kind::Erase: return "E";
    }
    return "?";
}

PebbleConfig apply(const PebbleConfig& config, const Move& move, int budget) {
    if (!is_legal(config, move, budget)) {
        std::ostringstream os;
        os << "illegal move " << kind_letter(move.kind) << " " << move.node;
        if (move.kind == Move::Kind::Place) {
            if (!config.pebbled(move.node - 1))
                os << ": node " << (move.node - 1) << " is unpebbled";
            else if (config.pebbled(move.node))
                os << ": node already pebbled";
            else
                os << ": no free pebble";
        } else if (move.kind == Move::Kind::Remove) {
            if (!config.pebbled(move.node - 1))
                os << ": node " << (move.node - 1) << " is unpebbled";
            else
                os << ": node not pebbled";
        } else {
            if (move.node <= 1)
                os << ": erasure is only allowed at nodes > 1";
            else if (!config.pebbled(move.node))
                os << ": node not pebbled";
            else
                os << ": erasure budget exhausted";
        }
        throw IllegalMove(os.str());
    }
    PebbleConfig next = config;
    next.set(move.node, move.kind == Move::Kind::Place);
    return next;
}

GameTrace replay(const PebbleConfig& initial, const std::vector<Move>& moves,
                 int erasure_budget) {
    PebbleConfig cur = initial;
    int peak = cur.placed();
    int erasures = 0;
    for (size_t idx = 0; idx < moves.size(); ++idx) {
        const int budget_left = erasure_budget - erasures;
        try {
            cur = apply(cur, moves[idx], budget_left);
        } catch (const IllegalMove& e) {
            throw IllegalMove(std::string(e.what()) + " (at move index " +
                                  std::to_string(idx) + ")",
                              static_cast<int>(idx));
        }
        if (moves[idx].kind == Move::Kind::Erase) ++erasures;
        peak = std::max(peak, cur.placed());
    }
    return GameTrace{initial, cur, moves, peak, erasures};
}

std::vector<Move> reverse_moves(const std::vector<Move>& moves) {
    std::vector<Move> out;
    out.reserve(moves.size());
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
        switch (it->kind) {
        case Move::Kind::Place:
            out.push_back({Move::Kind::Remove, it->node});
            break;
        case Move::Kind::Remove:
            out.push_back({Move::Kind::Place, it->node});
            break;
        case Move::Kind::Erase:
            throw NotReversible("erasure has no inverse move");
        }
    }
    return out;
}

std::string format_trace(const TraceFile& trace) {
    std::ostringstream os;
    os << "game T_G=" << trace.game_length << " n=" << trace.total_pebbles
       << " budget=" << trace.erasure_budget << "\n";
    for (const Move& m : trace.moves)
        os << kind_letter(m.kind) << " " << m.node << "\n";
    return os.str();
}

TraceFile parse_trace(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    TraceFile out{};
    bool have_header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string tag;
            ls >> tag;
            if (tag != "game")
                throw ParseError("trace line 1: expected `game` header");
            std::string field;
            while (ls >> field) {
                auto eq = field.find('=');
                if (eq == std::string::npos)
                    throw ParseError("trace header: malformed field `" + field + "`");
                const std::string key = field.substr(0, eq);
                const int value = std::stoi(field.substr(eq + 1));
                if (key == "T_G") out.game_length = value;
                else if (key == "n") out.total_pebbles = value;
                else if (key == "budget") out.erasure_budget = value;
                else throw ParseError("trace header: unknown field `" + key + "`");
            }
            have_header = true;
            continue;
        }
        std::string op;
        int node;
        if (!(ls >> op >> node) || op.size() != 1)
            throw ParseError("trace line " + std::to_string(lineno) +
                             ": expected `P|R|E <node>`");
        Move::Kind kind;
        switch (op[0]) {
        case 'P': kind = Move::Kind::Place; break;
        case 'R': kind = Move::Kind::Remove; break;
        case 'E': kind = Move::Kind::Erase; break;
        default:
            throw ParseError("trace line " + std::to_string(lineno) +
                             ": unknown move kind `" + op + "`");
        }
        out.moves.push_back({kind, node});
    }
    if (!have_header) throw ParseError("trace: missing `game` header");
    return out;
}

}  // namespace revsim
