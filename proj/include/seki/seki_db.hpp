#pragma once

#include "seki/goban.hpp"
#include "seki/shape_enum.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace seki {

struct DatabaseStats {
    int size = 0;
    std::uint64_t pattern_count = 0;  // distinct legal patterns verified
    std::uint64_t seki_count = 0;
    double seconds = 0.0;
    // Not part of the seki rate; reported alongside it.
    std::uint64_t raw_patterns = 0;      // shapes x fills, before symmetry dedup
    std::uint64_t illegal_patterns = 0;  // distinct fills that cannot arise on a board

    double seki_rate() const noexcept {
        return pattern_count == 0 ? 0.0 : static_cast<double>(seki_count) / static_cast<double>(pattern_count);
    }
    bool operator==(const DatabaseStats&) const = default;
};

// "size=<n> patterns=<c> seki=<s> rate=<r> seconds=<t> raw=<r> illegal=<i>"
std::string format_stats_line(const DatabaseStats& s);
DatabaseStats parse_stats_line(const std::string& line);

class DatabaseError : public std::runtime_error {
public:
    enum class Kind { BadMagic, UnsupportedVersion, CorruptEntry };

    DatabaseError(Kind kind, std::uint64_t offset, const std::string& what)
        : std::runtime_error(what), kind_(kind), offset_(offset) {}

    Kind kind() const noexcept { return kind_; }
    std::uint64_t offset() const noexcept { return offset_; }

private:
    Kind kind_;
    std::uint64_t offset_;
};

class SekiDatabase {
public:
    static constexpr std::uint32_t kFormatVersion = 1;

    // Returns false if the key was already present. Throws std::invalid_argument
    // for keys that do not decode to a 5..8 cell pattern with 2 or 3 empties.
    bool insert(const CanonicalKey& key);
    bool contains(const CanonicalKey& key) const;

    std::size_t size() const noexcept;
    std::size_t size(int area) const;
    bool empty() const noexcept { return size() == 0; }
    // Keys of one area size in ascending order.
    std::vector<CanonicalKey> sorted_keys(int area) const;

    const std::vector<DatabaseStats>& stats() const noexcept { return stats_; }
    void set_stats(std::vector<DatabaseStats> stats) { stats_ = std::move(stats); }
    std::uint32_t format_version() const noexcept { return version_; }

    void save(std::ostream& out) const;
    static SekiDatabase load(std::istream& in);

    // Writes the binary file and a "stats.txt" sidecar in the same directory.
    void save_file(const std::filesystem::path& path) const;
    static SekiDatabase load_file(const std::filesystem::path& path);
    static std::filesystem::path stats_path(const std::filesystem::path& db_path);

    // Compares keys only; stats are sidecar metadata.
    bool operator==(const SekiDatabase& o) const { return entries_ == o.entries_; }

private:
    std::array<std::unordered_set<CanonicalKey>, kMaxAreaSize - kMinAreaSize + 1> entries_;
    std::vector<DatabaseStats> stats_;
    std::uint32_t version_ = kFormatVersion;
};

// Cheap pre-check before canonicalization.
bool region_size_filter(const Position& pos, std::span<const Coord> region);

struct QueryResult {
    bool hit = false;
    Coord white_block;            // a stone of the enclosing block (valid on hit)
    std::vector<Coord> region;    // matched region (valid on hit)

    explicit operator bool() const noexcept { return hit; }
};

// Seki lookup around the most recent move. Any failed precondition is a Miss;
// a Miss says nothing about the block's status.
QueryResult query(const SekiDatabase& db, const Position& pos, Coord last_move);
inline QueryResult query(const SekiDatabase& db, const Board& board, Coord last_move) {
    return query(db, board.position(), last_move);
}

// Pattern built from a board region (cells plus their black contents).
Pattern region_pattern(const Position& pos, std::span<const Coord> region);

}  // namespace seki
