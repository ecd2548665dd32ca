#pragma once

#include "seki/goban.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace seki {

inline constexpr int kMinAreaSize = 5;
inline constexpr int kMaxAreaSize = 8;
// Any connected set of up to 8 cells fits an 8x8 box; masks use bit row*8+col.
inline constexpr int kShapeGrid = 8;

class SizeOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class Shape {
public:
    Shape() = default;
    // Translation-normalizes `cells`. Throws std::invalid_argument if the
    // cells are empty, repeated, or do not fit an 8x8 box.
    static Shape from_cells(std::span<const Coord> cells);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::uint64_t mask() const noexcept { return mask_; }
    int size() const noexcept;
    bool contains(Coord c) const noexcept;
    bool connected() const noexcept;
    std::vector<Coord> cells() const;  // row-major

    bool operator==(const Shape&) const = default;

private:
    friend class Pattern;
    std::uint8_t width_ = 0;
    std::uint8_t height_ = 0;
    std::uint64_t mask_ = 0;
};

// Canonical encoding of a pattern: bounding box plus 2-bit cell codes
// (0 outside, 1 empty, 2 black), row-major, four cells per byte starting at
// the low bits. Minimal over the eight square symmetries.
struct CanonicalKey {
    enum Code : std::uint8_t { Outside = 0, Empty = 1, Black = 2 };

    std::uint8_t width = 0;
    std::uint8_t height = 0;
    std::array<std::uint8_t, 16> packed{};

    int byte_count() const noexcept { return (width * height + 3) / 4; }
    std::uint8_t code(int col, int row) const noexcept;
    void set_code(int col, int row, std::uint8_t code) noexcept;
    int area() const noexcept;

    auto operator<=>(const CanonicalKey&) const = default;
};

std::string to_string(const CanonicalKey& k);

class Pattern {
public:
    Pattern() = default;
    Pattern(const Shape& shape, std::uint64_t black_mask);
    // Area cells and the subset of them holding black stones, at any offset.
    static Pattern from_cells(std::span<const Coord> area, std::span<const Coord> black);

    const Shape& shape() const noexcept { return shape_; }
    std::uint64_t black_mask() const noexcept { return black_; }
    std::uint64_t empty_mask() const noexcept { return shape_.mask() & ~black_; }
    int size() const noexcept { return shape_.size(); }
    int empty_count() const noexcept;

    std::vector<Coord> black_cells() const;
    std::vector<Coord> empty_cells() const;

    // One of the eight square symmetries, t in [0, 8). t = 0 is the identity.
    Pattern transformed(int t) const;

    bool operator==(const Pattern&) const = default;

private:
    Shape shape_;
    std::uint64_t black_ = 0;
};

// 1-wide row pattern from a string over {'e','b'}, e.g. "ebbbe".
Pattern corridor(std::string_view cells);

// Rows separated by '/' or newlines: 'e' or '.' empty, 'b' or 'X' black,
// '-' outside the area. Throws std::invalid_argument.
Pattern parse_pattern(std::string_view text);

std::vector<Shape> enumerate_shapes(int n);
std::vector<Pattern> enumerate_patterns(const Shape& shape);
CanonicalKey canonical_key(const Pattern& p);
Pattern pattern_from_key(const CanonicalKey& key);

}  // namespace seki

template <>
struct std::hash<seki::CanonicalKey> {
    std::size_t operator()(const seki::CanonicalKey& k) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ (static_cast<std::uint64_t>(k.width) << 8 | k.height);
        for (int i = 0; i < k.byte_count(); ++i) {
            h ^= k.packed[static_cast<std::size_t>(i)];
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};
