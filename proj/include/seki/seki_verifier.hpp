#pragma once

#include "seki/goban.hpp"
#include "seki/seki_db.hpp"
#include "seki/shape_enum.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

namespace seki {

// A pattern placed on a board one cell larger than its bounding box on every
// side. Every non-area cell is white, so the enclosure is one block whose
// only liberties are empty area cells; the board edge plays the black
// boundary and can never be captured.
struct LocalPosition {
    Position position;
    std::vector<Coord> area;  // board coordinates, row-major
    Coord enclosure;          // a stone of the enclosing white block
    Pattern pattern;

    bool enclosure_captured(const Position& p) const noexcept { return p.at(enclosure) == Cell::Empty; }
};

// nullopt for fills that cannot occur in play: a block without liberties, or
// an area with a hole (its white cell would be a second block).
std::optional<LocalPosition> embed(const Pattern& pattern);

enum class LocalOutcome { Seki, BlackKills, WhiteLives, IllegalPattern };
std::string_view to_string(LocalOutcome o);

struct AttackResult {
    bool attacker_wins = false;
    std::optional<Move> first_move;  // a winning first move when attacker_wins
    std::uint64_t nodes = 0;
};

struct AttackOptions {
    bool use_transposition_table = true;
};

// One-sided and-or search inside the area. The attacker moves first and may
// not pass on that move; a double pass is a loss for the attacker. Black wins
// by capturing the enclosure, White by making it unconditionally alive.
AttackResult attacker_search(const LocalPosition& pos, Color attacker, AttackOptions options = {});

LocalOutcome verify_local_outcome(const Pattern& pattern);

struct BuildOptions {
    int threads = 1;
    // Called once per finished size, from the calling thread.
    std::function<void(const DatabaseStats&)> on_size_done;
};

// Enumerates every shape and fill of the given sizes, verifies each distinct
// pattern, and stores the seki ones.
SekiDatabase build_database(const std::set<int>& sizes, const BuildOptions& options = {});

// Distinct canonical patterns of one size in key order, one representative each.
std::vector<Pattern> distinct_patterns(int size);

}  // namespace seki
