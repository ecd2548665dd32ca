#pragma once

#include <array>
#include <bitset>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seki {

// Largest board side. Play boards go up to 9x9; local seki positions need a
// white frame around the area, so the straight 8-cell shape embeds on 10x3.
inline constexpr int kMaxSide = 12;
inline constexpr int kMaxCells = kMaxSide * kMaxSide;

using CellMask = std::bitset<kMaxCells>;

enum class Color : std::uint8_t { Black = 1, White = 2 };
enum class Cell : std::uint8_t { Empty = 0, Black = 1, White = 2 };

constexpr Color opponent(Color c) noexcept { return c == Color::Black ? Color::White : Color::Black; }
constexpr Cell stone(Color c) noexcept { return static_cast<Cell>(c); }
constexpr bool is_stone(Cell c, Color color) noexcept { return c == stone(color); }

char color_char(Color c) noexcept;

struct Coord {
    int col = 0;
    int row = 0;

    auto operator<=>(const Coord&) const = default;
};

std::string to_string(Coord c);
// Parses "col,row".
std::optional<Coord> parse_coord(std::string_view text);

class Move {
public:
    constexpr Move() = default;
    static constexpr Move pass() noexcept { return Move{}; }
    static constexpr Move at(Coord c) noexcept { return Move{c}; }
    static constexpr Move at(int col, int row) noexcept { return Move{Coord{col, row}}; }

    constexpr bool is_pass() const noexcept { return pass_; }
    constexpr Coord coord() const noexcept { return coord_; }

    constexpr bool operator==(const Move&) const = default;

private:
    constexpr explicit Move(Coord c) : coord_(c), pass_(false) {}

    Coord coord_{};
    bool pass_ = true;
};

std::string to_string(const Move& m);

enum class MoveStatus { Ok, Occupied, Suicide, Superko, OutOfBounds };

std::string_view to_string(MoveStatus s);

struct Block {
    Color color = Color::Black;
    std::vector<Coord> stones;     // row-major order
    std::vector<Coord> liberties;  // row-major order

    bool operator==(const Block&) const = default;
};

struct EnclosedRegion {
    std::vector<Coord> cells;  // row-major order
};

struct EnclosedRegions {
    std::vector<EnclosedRegion> regions;
    bool external_liberty_free = false;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Zobrist position keys over (cells, side to move).
namespace zobrist {
std::uint64_t cell(int index, Cell c) noexcept;
std::uint64_t white_to_move() noexcept;
}  // namespace zobrist

// Rules engine without repetition history. Trivially copyable so search code
// can copy-make it freely; repetition is the caller's business.
class Position {
public:
    Position() : Position(1, 1) {}
    Position(int width, int height, Color to_move = Color::Black);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    int size() const noexcept { return width_ * height_; }

    bool in_bounds(Coord c) const noexcept {
        return c.col >= 0 && c.row >= 0 && c.col < width_ && c.row < height_;
    }
    int index(Coord c) const noexcept { return c.row * width_ + c.col; }
    Coord coord(int index) const noexcept { return Coord{index % width_, index / width_}; }

    Cell at(Coord c) const noexcept { return cells_[static_cast<std::size_t>(index(c))]; }
    Cell at(int index) const noexcept { return cells_[static_cast<std::size_t>(index)]; }

    // Setup edit; keeps the key in sync. Does not resolve captures.
    void set(Coord c, Cell value) noexcept;
    void set_to_move(Color c) noexcept;

    Color to_move() const noexcept { return to_move_; }
    int consecutive_passes() const noexcept { return consecutive_passes_; }
    std::uint64_t key() const noexcept { return key_; }
    const std::optional<Move>& last_move() const noexcept { return last_move_; }
    int last_captures() const noexcept { return last_captures_; }

    // Plays for the side to move. On failure the position is unchanged.
    MoveStatus play(Move m) noexcept;
    // Legality without applying (superko excluded).
    MoveStatus check(Coord c) const noexcept;

    int neighbors(int index, std::array<int, 4>& out) const noexcept;

    // Cells of the 4-connected block containing `index`, which must hold a stone.
    CellMask block_mask(int index) const noexcept;
    CellMask liberties_of(const CellMask& block) const noexcept;
    int stone_count(Color c) const noexcept;

    Block block_at(Coord c) const;
    std::vector<Block> blocks(Color c) const;

    // Non-white regions bounded solely by stones of the white block at
    // `white_stone`. Regions touching the board edge or another white block
    // are not enclosed.
    EnclosedRegions enclosed_regions(Coord white_stone) const;

    // Recomputes the key from scratch.
    std::uint64_t compute_key() const noexcept;

    // True when some block of either color has no liberties.
    bool has_dead_block() const noexcept;

    std::string to_text() const;
    static Position from_text(std::string_view text);

    bool operator==(const Position& o) const noexcept;

private:
    bool block_has_liberty(int index, int ignore) const noexcept;
    int remove_block(int index) noexcept;

    std::array<Cell, kMaxCells> cells_{};
    std::uint64_t key_ = 0;
    std::optional<Move> last_move_;
    std::int16_t width_ = 1;
    std::int16_t height_ = 1;
    Color to_move_ = Color::Black;
    std::uint8_t consecutive_passes_ = 0;
    std::uint8_t last_captures_ = 0;
};

// Position plus the key of every position in the current line, enforcing
// positional superko on (cells, side to move). Passes are never superko
// violations but are recorded.
class Board {
public:
    Board(int width, int height, Color to_move = Color::Black);
    explicit Board(const Position& pos);

    const Position& position() const noexcept { return pos_; }
    const std::vector<std::uint64_t>& history() const noexcept { return history_; }

    int width() const noexcept { return pos_.width(); }
    int height() const noexcept { return pos_.height(); }
    Cell at(Coord c) const noexcept { return pos_.at(c); }
    Color to_move() const noexcept { return pos_.to_move(); }
    int consecutive_passes() const noexcept { return pos_.consecutive_passes(); }
    std::uint64_t key() const noexcept { return pos_.key(); }
    const std::optional<Move>& last_move() const noexcept { return pos_.last_move(); }

    MoveStatus play(Move m);
    // `color` must be the side to move.
    MoveStatus play(Move m, Color color);

    bool seen(std::uint64_t key) const noexcept;

    std::vector<Block> blocks(Color c) const { return pos_.blocks(c); }
    EnclosedRegions enclosed_regions(const Block& white_block) const;

    std::string to_text() const { return pos_.to_text(); }
    static Board from_text(std::string_view text) { return Board(Position::from_text(text)); }

private:
    Position pos_;
    std::vector<std::uint64_t> history_;
};

inline std::uint64_t position_key(const Board& b) noexcept { return b.key(); }

}  // namespace seki
