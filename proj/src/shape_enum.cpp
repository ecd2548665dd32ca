#include "seki/shape_enum.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace seki {

namespace {

constexpr std::uint64_t bit(int col, int row) { return std::uint64_t{1} << (row * kShapeGrid + col); }

// Image of (col,row) in a w x h box under symmetry t; returns the new box dims.
Coord apply(int t, Coord c, int w, int h) {
    switch (t) {
    case 0: return {c.col, c.row};
    case 1: return {w - 1 - c.col, c.row};
    case 2: return {c.col, h - 1 - c.row};
    case 3: return {w - 1 - c.col, h - 1 - c.row};
    case 4: return {c.row, c.col};
    case 5: return {h - 1 - c.row, c.col};
    case 6: return {c.row, w - 1 - c.col};
    default: return {h - 1 - c.row, w - 1 - c.col};
    }
}

std::uint64_t transform_mask(std::uint64_t m, int t, int w, int h) {
    std::uint64_t out = 0;
    while (m) {
        int b = std::countr_zero(m);
        m &= m - 1;
        Coord c = apply(t, Coord{b % kShapeGrid, b / kShapeGrid}, w, h);
        out |= bit(c.col, c.row);
    }
    return out;
}

CanonicalKey encode(int w, int h, std::uint64_t area, std::uint64_t black) {
    CanonicalKey k;
    k.width = static_cast<std::uint8_t>(w);
    k.height = static_cast<std::uint8_t>(h);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            std::uint64_t b = bit(c, r);
            if (area & b) k.set_code(c, r, (black & b) ? CanonicalKey::Black : CanonicalKey::Empty);
        }
    return k;
}

}  // namespace

Shape Shape::from_cells(std::span<const Coord> cells) {
    if (cells.empty()) throw std::invalid_argument("shape has no cells");
    int min_c = cells[0].col, min_r = cells[0].row, max_c = min_c, max_r = min_r;
    for (Coord c : cells) {
        min_c = std::min(min_c, c.col);
        min_r = std::min(min_r, c.row);
        max_c = std::max(max_c, c.col);
        max_r = std::max(max_r, c.row);
    }
    if (max_c - min_c >= kShapeGrid || max_r - min_r >= kShapeGrid)
        throw std::invalid_argument("shape does not fit an 8x8 box");
    Shape s;
    s.width_ = static_cast<std::uint8_t>(max_c - min_c + 1);
    s.height_ = static_cast<std::uint8_t>(max_r - min_r + 1);
    for (Coord c : cells) {
        std::uint64_t b = bit(c.col - min_c, c.row - min_r);
        if (s.mask_ & b) throw std::invalid_argument("shape has a repeated cell");
        s.mask_ |= b;
    }
    return s;
}

int Shape::size() const noexcept { return std::popcount(mask_); }

bool Shape::contains(Coord c) const noexcept {
    return c.col >= 0 && c.row >= 0 && c.col < width_ && c.row < height_ && (mask_ & bit(c.col, c.row));
}

bool Shape::connected() const noexcept {
    if (mask_ == 0) return false;
    std::uint64_t seen = mask_ & (~mask_ + 1);
    for (;;) {
        std::uint64_t grow = seen | (seen << kShapeGrid) | (seen >> kShapeGrid);
        // Horizontal steps must not wrap between rows.
        constexpr std::uint64_t not_first_col = ~0x0101010101010101ULL;
        constexpr std::uint64_t not_last_col = ~0x8080808080808080ULL;
        grow |= ((seen & not_last_col) << 1) | ((seen & not_first_col) >> 1);
        grow &= mask_;
        if (grow == seen) break;
        seen = grow;
    }
    return seen == mask_;
}

std::vector<Coord> Shape::cells() const {
    std::vector<Coord> out;
    for (int r = 0; r < height_; ++r)
        for (int c = 0; c < width_; ++c)
            if (mask_ & bit(c, r)) out.push_back({c, r});
    return out;
}

std::uint8_t CanonicalKey::code(int col, int row) const noexcept {
    int i = row * width + col;
    return static_cast<std::uint8_t>((packed[static_cast<std::size_t>(i / 4)] >> (2 * (i % 4))) & 3u);
}

void CanonicalKey::set_code(int col, int row, std::uint8_t c) noexcept {
    int i = row * width + col;
    auto& byte = packed[static_cast<std::size_t>(i / 4)];
    byte = static_cast<std::uint8_t>((byte & ~(3u << (2 * (i % 4)))) | (c << (2 * (i % 4))));
}

int CanonicalKey::area() const noexcept {
    int n = 0;
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c) n += code(c, r) != Outside;
    return n;
}

std::string to_string(const CanonicalKey& k) {
    std::string s = std::to_string(k.width) + "x" + std::to_string(k.height) + ":";
    for (int r = 0; r < k.height; ++r) {
        if (r) s += '/';
        for (int c = 0; c < k.width; ++c) {
            switch (k.code(c, r)) {
            case CanonicalKey::Empty: s += 'e'; break;
            case CanonicalKey::Black: s += 'b'; break;
            case CanonicalKey::Outside: s += '#'; break;
            default: s += '?';
            }
        }
    }
    return s;
}

Pattern::Pattern(const Shape& shape, std::uint64_t black_mask) : shape_(shape), black_(black_mask) {
    if ((black_mask & ~shape.mask()) != 0) throw std::invalid_argument("black stones outside the pattern area");
}

Pattern Pattern::from_cells(std::span<const Coord> area, std::span<const Coord> black) {
    Shape s = Shape::from_cells(area);
    int min_c = area[0].col, min_r = area[0].row;
    for (Coord c : area) {
        min_c = std::min(min_c, c.col);
        min_r = std::min(min_r, c.row);
    }
    std::uint64_t bm = 0;
    for (Coord c : black) {
        Coord rel{c.col - min_c, c.row - min_r};
        if (!s.contains(rel)) throw std::invalid_argument("black stone outside the pattern area");
        bm |= bit(rel.col, rel.row);
    }
    return Pattern(s, bm);
}

int Pattern::empty_count() const noexcept { return std::popcount(empty_mask()); }

std::vector<Coord> Pattern::black_cells() const {
    std::vector<Coord> out;
    for (Coord c : shape_.cells())
        if (black_ & bit(c.col, c.row)) out.push_back(c);
    return out;
}

std::vector<Coord> Pattern::empty_cells() const {
    std::vector<Coord> out;
    for (Coord c : shape_.cells())
        if (!(black_ & bit(c.col, c.row))) out.push_back(c);
    return out;
}

Pattern Pattern::transformed(int t) const {
    int w = shape_.width_, h = shape_.height_;
    Shape s;
    s.width_ = static_cast<std::uint8_t>(t < 4 ? w : h);
    s.height_ = static_cast<std::uint8_t>(t < 4 ? h : w);
    s.mask_ = transform_mask(shape_.mask_, t, w, h);
    return Pattern(s, transform_mask(black_, t, w, h));
}

Pattern corridor(std::string_view cells) {
    std::vector<Coord> area, black;
    for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
        area.push_back({i, 0});
        if (cells[static_cast<std::size_t>(i)] == 'b') black.push_back({i, 0});
    }
    return Pattern::from_cells(area, black);
}

Pattern parse_pattern(std::string_view text) {
    std::vector<Coord> area, black;
    int row = 0, col = 0;
    for (char ch : text) {
        switch (ch) {
        case '/':
        case '\n':
            if (col > 0) ++row;
            col = 0;
            continue;
        case '\r':
            continue;
        case 'b':
        case 'X': black.push_back({col, row}); [[fallthrough]];
        case 'e':
        case '.': area.push_back({col, row}); break;
        case '-': break;
        default: throw std::invalid_argument(std::string("bad pattern character '") + ch + "'");
        }
        if (++col > kShapeGrid || row >= kShapeGrid) throw std::invalid_argument("pattern exceeds the 8x8 grid");
    }
    if (area.empty()) throw std::invalid_argument("empty pattern");
    Pattern p = Pattern::from_cells(area, black);
    if (!p.shape().connected()) throw std::invalid_argument("pattern area is not connected");
    return p;
}

CanonicalKey canonical_key(const Pattern& p) {
    const int w = p.shape().width(), h = p.shape().height();
    CanonicalKey best{};
    for (int t = 0; t < 8; ++t) {
        int tw = t < 4 ? w : h, th = t < 4 ? h : w;
        CanonicalKey k = encode(tw, th, transform_mask(p.shape().mask(), t, w, h), transform_mask(p.black_mask(), t, w, h));
        if (t == 0 || k < best) best = k;
    }
    return best;
}

Pattern pattern_from_key(const CanonicalKey& key) {
    if (key.width < 1 || key.height < 1 || key.width > kShapeGrid || key.height > kShapeGrid)
        throw std::invalid_argument("canonical key has bad dimensions");
    std::vector<Coord> area, black;
    for (int r = 0; r < key.height; ++r)
        for (int c = 0; c < key.width; ++c) {
            auto code = key.code(c, r);
            if (code == CanonicalKey::Outside) continue;
            if (code != CanonicalKey::Empty && code != CanonicalKey::Black)
                throw std::invalid_argument("canonical key has a bad cell code");
            area.push_back({c, r});
            if (code == CanonicalKey::Black) black.push_back({c, r});
        }
    if (area.empty()) throw std::invalid_argument("canonical key has no area");
    return Pattern::from_cells(area, black);
}

std::vector<Shape> enumerate_shapes(int n) {
    if (n < 1 || n > kMaxAreaSize) throw SizeOutOfRange("shape size must be in [1, 8], got " + std::to_string(n));
    std::map<CanonicalKey, Shape> level;
    Coord origin{0, 0};
    level.emplace(canonical_key(Pattern(Shape::from_cells({&origin, 1}), 0)), Shape::from_cells({&origin, 1}));
    for (int k = 2; k <= n; ++k) {
        std::map<CanonicalKey, Shape> next;
        for (const auto& [key, shape] : level) {
            auto cells = shape.cells();
            for (Coord c : cells) {
                for (Coord d : {Coord{1, 0}, Coord{-1, 0}, Coord{0, 1}, Coord{0, -1}}) {
                    Coord add{c.col + d.col, c.row + d.row};
                    if (std::find(cells.begin(), cells.end(), add) != cells.end()) continue;
                    auto grown = cells;
                    grown.push_back(add);
                    Shape s = Shape::from_cells(grown);
                    CanonicalKey ck = canonical_key(Pattern(s, 0));
                    if (!next.contains(ck)) next.emplace(ck, pattern_from_key(ck).shape());
                }
            }
        }
        level = std::move(next);
    }
    std::vector<Shape> out;
    out.reserve(level.size());
    for (auto& [key, shape] : level) out.push_back(shape);
    return out;
}

std::vector<Pattern> enumerate_patterns(const Shape& shape) {
    const int n = shape.size();
    if (n < kMinAreaSize || n > kMaxAreaSize)
        throw SizeOutOfRange("pattern area size must be in [5, 8], got " + std::to_string(n));
    auto cells = shape.cells();
    std::vector<std::uint64_t> bits;
    for (Coord c : cells) bits.push_back(bit(c.col, c.row));
    std::vector<Pattern> out;
    out.reserve(static_cast<std::size_t>(n * (n - 1) / 2 + n * (n - 1) * (n - 2) / 6));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.emplace_back(shape, shape.mask() & ~(bits[static_cast<std::size_t>(i)] | bits[static_cast<std::size_t>(j)]));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                out.emplace_back(shape, shape.mask() & ~(bits[static_cast<std::size_t>(i)] | bits[static_cast<std::size_t>(j)] | bits[static_cast<std::size_t>(k)]));
    return out;
}

}  // namespace seki
