#include "seki/goban.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

namespace seki {

namespace {

struct ZobristTable {
    std::array<std::array<std::uint64_t, 3>, kMaxCells> cells{};
    std::uint64_t white = 0;

    ZobristTable() {
        std::mt19937_64 rng(0x5e4b1dbULL);
        for (auto& c : cells) {
            c[0] = 0;
            c[1] = rng();
            c[2] = rng();
        }
        white = rng();
    }
};

const ZobristTable& table() {
    static const ZobristTable t;
    return t;
}

char cell_char(Cell c) {
    switch (c) {
    case Cell::Black: return 'X';
    case Cell::White: return 'O';
    default: return '.';
    }
}

}  // namespace

namespace zobrist {
std::uint64_t cell(int index, Cell c) noexcept { return table().cells[static_cast<std::size_t>(index)][static_cast<int>(c)]; }
std::uint64_t white_to_move() noexcept { return table().white; }
}  // namespace zobrist

char color_char(Color c) noexcept { return c == Color::Black ? 'B' : 'W'; }

std::string to_string(Coord c) { return std::to_string(c.col) + "," + std::to_string(c.row); }

std::optional<Coord> parse_coord(std::string_view text) {
    auto comma = text.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    Coord c;
    auto a = text.substr(0, comma);
    auto b = text.substr(comma + 1);
    auto r1 = std::from_chars(a.data(), a.data() + a.size(), c.col);
    auto r2 = std::from_chars(b.data(), b.data() + b.size(), c.row);
    if (r1.ec != std::errc{} || r1.ptr != a.data() + a.size()) return std::nullopt;
    if (r2.ec != std::errc{} || r2.ptr != b.data() + b.size()) return std::nullopt;
    return c;
}

std::string to_string(const Move& m) { return m.is_pass() ? "pass" : to_string(m.coord()); }

std::string_view to_string(MoveStatus s) {
    switch (s) {
    case MoveStatus::Ok: return "Ok";
    case MoveStatus::Occupied: return "Occupied";
    case MoveStatus::Suicide: return "Suicide";
    case MoveStatus::Superko: return "Superko";
    case MoveStatus::OutOfBounds: return "OutOfBounds";
    }
    return "?";
}

Position::Position(int width, int height, Color to_move)
    : width_(static_cast<std::int16_t>(width)), height_(static_cast<std::int16_t>(height)), to_move_(to_move) {
    if (width < 1 || height < 1 || width > kMaxSide || height > kMaxSide)
        throw std::invalid_argument("board dimensions out of range: " + std::to_string(width) + "x" +
                                    std::to_string(height));
    key_ = compute_key();
}

void Position::set(Coord c, Cell value) noexcept {
    int i = index(c);
    key_ ^= zobrist::cell(i, cells_[static_cast<std::size_t>(i)]) ^ zobrist::cell(i, value);
    cells_[static_cast<std::size_t>(i)] = value;
}

void Position::set_to_move(Color c) noexcept {
    if (c != to_move_) key_ ^= zobrist::white_to_move();
    to_move_ = c;
}

std::uint64_t Position::compute_key() const noexcept {
    std::uint64_t k = to_move_ == Color::White ? zobrist::white_to_move() : 0;
    for (int i = 0; i < size(); ++i) k ^= zobrist::cell(i, cells_[static_cast<std::size_t>(i)]);
    return k;
}

int Position::neighbors(int i, std::array<int, 4>& out) const noexcept {
    int n = 0;
    int col = i % width_;
    if (col > 0) out[n++] = i - 1;
    if (col + 1 < width_) out[n++] = i + 1;
    if (i >= width_) out[n++] = i - width_;
    if (i + width_ < size()) out[n++] = i + width_;
    return n;
}

CellMask Position::block_mask(int start) const noexcept {
    CellMask seen;
    Cell c = at(start);
    std::array<int, kMaxCells> stack;
    int top = 0;
    stack[top++] = start;
    seen.set(static_cast<std::size_t>(start));
    std::array<int, 4> nb;
    while (top > 0) {
        int i = stack[--top];
        int k = neighbors(i, nb);
        for (int j = 0; j < k; ++j) {
            int n = nb[j];
            if (!seen.test(static_cast<std::size_t>(n)) && at(n) == c) {
                seen.set(static_cast<std::size_t>(n));
                stack[top++] = n;
            }
        }
    }
    return seen;
}

CellMask Position::liberties_of(const CellMask& block) const noexcept {
    CellMask libs;
    std::array<int, 4> nb;
    for (int i = 0; i < size(); ++i) {
        if (!block.test(static_cast<std::size_t>(i))) continue;
        int k = neighbors(i, nb);
        for (int j = 0; j < k; ++j)
            if (at(nb[j]) == Cell::Empty) libs.set(static_cast<std::size_t>(nb[j]));
    }
    return libs;
}

bool Position::block_has_liberty(int start, int ignore) const noexcept {
    CellMask seen;
    Cell c = at(start);
    std::array<int, kMaxCells> stack;
    int top = 0;
    stack[top++] = start;
    seen.set(static_cast<std::size_t>(start));
    std::array<int, 4> nb;
    while (top > 0) {
        int i = stack[--top];
        int k = neighbors(i, nb);
        for (int j = 0; j < k; ++j) {
            int n = nb[j];
            Cell v = at(n);
            if (v == Cell::Empty) {
                if (n != ignore) return true;
            } else if (v == c && !seen.test(static_cast<std::size_t>(n))) {
                seen.set(static_cast<std::size_t>(n));
                stack[top++] = n;
            }
        }
    }
    return false;
}

int Position::remove_block(int start) noexcept {
    CellMask m = block_mask(start);
    int removed = 0;
    for (int i = 0; i < size(); ++i) {
        if (m.test(static_cast<std::size_t>(i))) {
            key_ ^= zobrist::cell(i, cells_[static_cast<std::size_t>(i)]);
            cells_[static_cast<std::size_t>(i)] = Cell::Empty;
            ++removed;
        }
    }
    return removed;
}

MoveStatus Position::check(Coord c) const noexcept {
    if (!in_bounds(c)) return MoveStatus::OutOfBounds;
    int i = index(c);
    if (at(i) != Cell::Empty) return MoveStatus::Occupied;
    Cell own = stone(to_move_);
    Cell opp = stone(opponent(to_move_));
    std::array<int, 4> nb;
    int k = neighbors(i, nb);
    for (int j = 0; j < k; ++j) {
        Cell v = at(nb[j]);
        if (v == Cell::Empty) return MoveStatus::Ok;
        if (v == own && block_has_liberty(nb[j], i)) return MoveStatus::Ok;
        if (v == opp && !block_has_liberty(nb[j], i)) return MoveStatus::Ok;  // capture
    }
    return MoveStatus::Suicide;
}

MoveStatus Position::play(Move m) noexcept {
    if (m.is_pass()) {
        set_to_move(opponent(to_move_));
        if (consecutive_passes_ < 255) ++consecutive_passes_;
        last_move_ = m;
        last_captures_ = 0;
        return MoveStatus::Ok;
    }
    MoveStatus s = check(m.coord());
    if (s != MoveStatus::Ok) return s;
    int i = index(m.coord());
    set(m.coord(), stone(to_move_));
    Cell opp = stone(opponent(to_move_));
    int captured = 0;
    std::array<int, 4> nb;
    int k = neighbors(i, nb);
    for (int j = 0; j < k; ++j)
        if (at(nb[j]) == opp && !block_has_liberty(nb[j], -1)) captured += remove_block(nb[j]);
    last_captures_ = static_cast<std::uint8_t>(std::min(captured, 255));
    consecutive_passes_ = 0;
    last_move_ = m;
    set_to_move(opponent(to_move_));
    return MoveStatus::Ok;
}

int Position::stone_count(Color c) const noexcept {
    Cell s = stone(c);
    int n = 0;
    for (int i = 0; i < size(); ++i) n += at(i) == s;
    return n;
}

Block Position::block_at(Coord c) const {
    Block b;
    int start = index(c);
    b.color = at(start) == Cell::White ? Color::White : Color::Black;
    CellMask m = block_mask(start);
    CellMask libs = liberties_of(m);
    for (int i = 0; i < size(); ++i) {
        if (m.test(static_cast<std::size_t>(i))) b.stones.push_back(coord(i));
        if (libs.test(static_cast<std::size_t>(i))) b.liberties.push_back(coord(i));
    }
    return b;
}

std::vector<Block> Position::blocks(Color c) const {
    std::vector<Block> out;
    CellMask done;
    for (int i = 0; i < size(); ++i) {
        if (at(i) != stone(c) || done.test(static_cast<std::size_t>(i))) continue;
        done |= block_mask(i);
        out.push_back(block_at(coord(i)));
    }
    return out;
}

EnclosedRegions Position::enclosed_regions(Coord white_stone) const {
    EnclosedRegions result;
    int start = index(white_stone);
    if (!in_bounds(white_stone) || at(start) != Cell::White) return result;
    CellMask block = block_mask(start);
    CellMask libs = liberties_of(block);
    CellMask visited;
    CellMask covered;
    std::array<int, 4> nb;
    for (int i = 0; i < size(); ++i) {
        if (block.test(static_cast<std::size_t>(i)) || at(i) == Cell::White) continue;
        if (visited.test(static_cast<std::size_t>(i))) continue;
        // Flood the non-white region and note what bounds it.
        std::vector<int> cells;
        bool touches_block = false;
        bool closed = true;
        std::vector<int> stack{i};
        visited.set(static_cast<std::size_t>(i));
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            cells.push_back(cur);
            int col = cur % width_;
            int row = cur / width_;
            if (col == 0 || row == 0 || col == width_ - 1 || row == height_ - 1) closed = false;
            int k = neighbors(cur, nb);
            for (int j = 0; j < k; ++j) {
                int n = nb[j];
                if (at(n) == Cell::White) {
                    if (block.test(static_cast<std::size_t>(n)))
                        touches_block = true;
                    else
                        closed = false;
                } else if (!visited.test(static_cast<std::size_t>(n))) {
                    visited.set(static_cast<std::size_t>(n));
                    stack.push_back(n);
                }
            }
        }
        if (!touches_block || !closed) continue;
        std::sort(cells.begin(), cells.end());
        EnclosedRegion r;
        for (int c : cells) {
            r.cells.push_back(coord(c));
            covered.set(static_cast<std::size_t>(c));
        }
        result.regions.push_back(std::move(r));
    }
    result.external_liberty_free = (libs & ~covered).none();
    return result;
}

bool Position::has_dead_block() const noexcept {
    for (int i = 0; i < size(); ++i)
        if (at(i) != Cell::Empty && !block_has_liberty(i, -1)) return true;
    return false;
}

std::string Position::to_text() const {
    std::string s = std::to_string(width_) + " " + std::to_string(height_) + " " + color_char(to_move_) + "\n";
    for (int r = 0; r < height_; ++r) {
        for (int c = 0; c < width_; ++c) s += cell_char(at(Coord{c, r}));
        s += '\n';
    }
    return s;
}

Position Position::from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string header;
    if (!std::getline(in, header)) throw ParseError("empty board text");
    std::istringstream hs(header);
    int w = 0, h = 0;
    std::string side;
    if (!(hs >> w >> h >> side) || (side != "B" && side != "W"))
        throw ParseError("bad board header: '" + header + "'");
    if (w < 1 || h < 1 || w > kMaxSide || h > kMaxSide) throw ParseError("board dimensions out of range");
    Position p(w, h, side == "B" ? Color::Black : Color::White);
    for (int r = 0; r < h; ++r) {
        std::string line;
        if (!std::getline(in, line)) throw ParseError("missing board row " + std::to_string(r));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (static_cast<int>(line.size()) != w) throw ParseError("row " + std::to_string(r) + " has wrong width");
        for (int c = 0; c < w; ++c) {
            switch (line[static_cast<std::size_t>(c)]) {
            case '.': break;
            case 'X': p.set(Coord{c, r}, Cell::Black); break;
            case 'O': p.set(Coord{c, r}, Cell::White); break;
            default: throw ParseError("bad cell character in row " + std::to_string(r));
            }
        }
    }
    if (p.has_dead_block()) throw ParseError("board has a block without liberties");
    return p;
}

bool Position::operator==(const Position& o) const noexcept {
    if (width_ != o.width_ || height_ != o.height_ || to_move_ != o.to_move_) return false;
    return std::equal(cells_.begin(), cells_.begin() + size(), o.cells_.begin());
}

Board::Board(int width, int height, Color to_move) : Board(Position(width, height, to_move)) {}

Board::Board(const Position& pos) : pos_(pos) { history_.push_back(pos_.key()); }

MoveStatus Board::play(Move m) {
    Position next = pos_;
    MoveStatus s = next.play(m);
    if (s != MoveStatus::Ok) return s;
    if (!m.is_pass() && seen(next.key())) return MoveStatus::Superko;
    pos_ = next;
    history_.push_back(pos_.key());
    return MoveStatus::Ok;
}

MoveStatus Board::play(Move m, Color color) {
    if (color != pos_.to_move()) throw std::logic_error("play: color is not the side to move");
    return play(m);
}

bool Board::seen(std::uint64_t key) const noexcept {
    return std::find(history_.begin(), history_.end(), key) != history_.end();
}

EnclosedRegions Board::enclosed_regions(const Block& white_block) const {
    if (white_block.stones.empty()) return {};
    return pos_.enclosed_regions(white_block.stones.front());
}

}  // namespace seki
