#pragma once

#include "seki/goban.hpp"
#include "seki/seki_db.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seki {

enum class GameValue { WhiteWin, BlackWin, Unknown };
std::string_view to_string(GameValue v);

enum class Terminal { WhiteWin, BlackWin, NonTerminal };

struct TerminalInfo {
    Terminal status = Terminal::NonTerminal;
    bool db_hit = false;
};

// Killall-Go terminal rules. White wins with an unconditionally alive block
// or a seki hit around the last move. Black wins by capturing the last white
// stones, or when White passes with none on the board. After two passes White
// wins if any white stone is left.
TerminalInfo terminal_check(const Position& pos, const SekiDatabase* db);
inline Terminal terminal_check(const Board& board, const SekiDatabase* db) {
    return terminal_check(board.position(), db).status;
}

struct SolveLimits {
    std::uint64_t max_nodes = 10'000'000;
    double max_seconds = 600.0;
    std::size_t transposition_table_capacity = 1 << 22;
    bool use_transposition_table = true;
};

struct SolveResult {
    GameValue value = GameValue::Unknown;
    std::uint64_t nodes = 0;
    std::uint64_t terminal_nodes = 0;
    std::uint64_t db_hits = 0;
    double elapsed_seconds = 0.0;
    std::vector<Move> principal_variation;
};

// Depth-first and-or search with positional superko. Value is exact unless a
// limit tripped, in which case it is Unknown.
SolveResult solve(const Board& board, const SolveLimits& limits, const SekiDatabase* db = nullptr);

class UndefinedHitRate : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct HitRateReport {
    double hit_rate = 0.0;
    bool solved = false;
};

HitRateReport hit_rate(const SolveResult& result);

// {"value": ..., "nodes": ..., ...} on one line. hit_rate is null when undefined.
std::string format_result(const SolveResult& result);

}  // namespace seki
