#include "seki/seki_db.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace seki {

namespace {

constexpr char kMagic[4] = {'S', 'K', 'D', 'B'};

void put_u32(std::ostream& out, std::uint32_t v) {
    char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff), static_cast<char>((v >> 16) & 0xff),
                 static_cast<char>((v >> 24) & 0xff)};
    out.write(b, 4);
}

class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    bool read(void* dst, std::size_t n) {
        in_.read(static_cast<char*>(dst), static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(in_.gcount()) != n) return false;
        offset_ += n;
        return true;
    }
    bool u32(std::uint32_t& v) {
        unsigned char b[4];
        if (!read(b, 4)) return false;
        v = static_cast<std::uint32_t>(b[0]) | static_cast<std::uint32_t>(b[1]) << 8 |
            static_cast<std::uint32_t>(b[2]) << 16 | static_cast<std::uint32_t>(b[3]) << 24;
        return true;
    }
    std::uint64_t offset() const { return offset_; }
    bool at_end() { return in_.peek() == std::char_traits<char>::eof(); }

private:
    std::istream& in_;
    std::uint64_t offset_ = 0;
};

[[noreturn]] void corrupt(std::uint64_t offset, const std::string& what) {
    throw DatabaseError(DatabaseError::Kind::CorruptEntry, offset, "corrupt database entry at offset " + std::to_string(offset) + ": " + what);
}

// Why `key` is not a storable seki key, or empty if it is.
std::string key_problem(const CanonicalKey& key, int expected_area) {
    if (key.width < 1 || key.height < 1 || key.width > kShapeGrid || key.height > kShapeGrid) return "bad bounding box";
    Pattern p;
    try {
        p = pattern_from_key(key);
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    if (p.size() < kMinAreaSize || p.size() > kMaxAreaSize) return "area size out of range";
    if (expected_area > 0 && p.size() != expected_area) return "area size does not match its section";
    if (!p.shape().connected()) return "area is not connected";
    if (p.empty_count() < 2 || p.empty_count() > 3) return "pattern must leave 2 or 3 empty cells";
    if (!(canonical_key(p) == key)) return "key is not in canonical form";
    return {};
}

std::size_t slot(int area) { return static_cast<std::size_t>(area - kMinAreaSize); }

}  // namespace

std::string format_stats_line(const DatabaseStats& s) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "size=%d patterns=%llu seki=%llu rate=%.6f seconds=%.3f raw=%llu illegal=%llu", s.size,
                  static_cast<unsigned long long>(s.pattern_count), static_cast<unsigned long long>(s.seki_count),
                  s.seki_rate(), s.seconds, static_cast<unsigned long long>(s.raw_patterns),
                  static_cast<unsigned long long>(s.illegal_patterns));
    return buf;
}

DatabaseStats parse_stats_line(const std::string& line) {
    std::map<std::string, std::string> fields;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad stats field: " + tok);
        fields[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    auto need = [&](const char* name) -> const std::string& {
        auto it = fields.find(name);
        if (it == fields.end()) throw std::invalid_argument(std::string("stats line lacks ") + name);
        return it->second;
    };
    DatabaseStats s;
    s.size = std::stoi(need("size"));
    s.pattern_count = std::stoull(need("patterns"));
    s.seki_count = std::stoull(need("seki"));
    s.seconds = std::stod(need("seconds"));
    if (fields.contains("raw")) s.raw_patterns = std::stoull(fields["raw"]);
    if (fields.contains("illegal")) s.illegal_patterns = std::stoull(fields["illegal"]);
    return s;
}

bool SekiDatabase::insert(const CanonicalKey& key) {
    if (auto why = key_problem(key, 0); !why.empty()) throw std::invalid_argument("not a seki key: " + why);
    return entries_[slot(key.area())].insert(key).second;
}

bool SekiDatabase::contains(const CanonicalKey& key) const {
    int a = key.area();
    if (a < kMinAreaSize || a > kMaxAreaSize) return false;
    return entries_[slot(a)].contains(key);
}

std::size_t SekiDatabase::size() const noexcept {
    std::size_t n = 0;
    for (const auto& s : entries_) n += s.size();
    return n;
}

std::size_t SekiDatabase::size(int area) const {
    if (area < kMinAreaSize || area > kMaxAreaSize) return 0;
    return entries_[slot(area)].size();
}

std::vector<CanonicalKey> SekiDatabase::sorted_keys(int area) const {
    if (area < kMinAreaSize || area > kMaxAreaSize) return {};
    const auto& set = entries_[slot(area)];
    std::vector<CanonicalKey> keys(set.begin(), set.end());
    std::sort(keys.begin(), keys.end());
    return keys;
}

void SekiDatabase::save(std::ostream& out) const {
    out.write(kMagic, 4);
    put_u32(out, version_);
    for (int n = kMinAreaSize; n <= kMaxAreaSize; ++n) {
        auto keys = sorted_keys(n);
        put_u32(out, static_cast<std::uint32_t>(keys.size()));
        for (const auto& k : keys) {
            out.put(static_cast<char>(k.width));
            out.put(static_cast<char>(k.height));
            out.write(reinterpret_cast<const char*>(k.packed.data()), k.byte_count());
        }
    }
}

SekiDatabase SekiDatabase::load(std::istream& in) {
    Reader r(in);
    char magic[4];
    if (!r.read(magic, 4) || !std::equal(magic, magic + 4, kMagic))
        throw DatabaseError(DatabaseError::Kind::BadMagic, 0, "not a seki database (bad magic)");
    std::uint32_t version = 0;
    if (!r.u32(version)) corrupt(r.offset(), "truncated header");
    if (version != kFormatVersion)
        throw DatabaseError(DatabaseError::Kind::UnsupportedVersion, 4, "unsupported database version " + std::to_string(version));
    SekiDatabase db;
    for (int n = kMinAreaSize; n <= kMaxAreaSize; ++n) {
        std::uint32_t count = 0;
        if (!r.u32(count)) corrupt(r.offset(), "truncated section header");
        for (std::uint32_t i = 0; i < count; ++i) {
            std::uint64_t at = r.offset();
            unsigned char dims[2];
            if (!r.read(dims, 2)) corrupt(at, "truncated entry");
            CanonicalKey k;
            k.width = dims[0];
            k.height = dims[1];
            if (k.width < 1 || k.height < 1 || k.width > kShapeGrid || k.height > kShapeGrid) corrupt(at, "bad bounding box");
            if (!r.read(k.packed.data(), static_cast<std::size_t>(k.byte_count()))) corrupt(at, "truncated entry");
            if (auto why = key_problem(k, n); !why.empty()) corrupt(at, why);
            if (!db.entries_[slot(n)].insert(k).second) corrupt(at, "duplicate key");
        }
    }
    if (!r.at_end()) corrupt(r.offset(), "trailing bytes");
    return db;
}

std::filesystem::path SekiDatabase::stats_path(const std::filesystem::path& db_path) {
    return db_path.parent_path() / "stats.txt";
}

void SekiDatabase::save_file(const std::filesystem::path& path) const {
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::ios_base::failure("cannot open " + path.string() + " for writing");
        save(out);
        if (!out) throw std::ios_base::failure("write failed: " + path.string());
    }
    std::ofstream stats(stats_path(path), std::ios::trunc);
    if (!stats) throw std::ios_base::failure("cannot write " + stats_path(path).string());
    for (const auto& s : stats_) stats << format_stats_line(s) << '\n';
}

SekiDatabase SekiDatabase::load_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path.string());
    SekiDatabase db = load(in);
    std::ifstream stats(stats_path(path));
    std::string line;
    while (stats && std::getline(stats, line)) {
        if (line.empty()) continue;
        try {
            db.stats_.push_back(parse_stats_line(line));
        } catch (const std::exception&) {
            // Foreign stats files are ignored; the keys are what matter.
            db.stats_.clear();
            break;
        }
    }
    return db;
}

bool region_size_filter(const Position& pos, std::span<const Coord> region) {
    int n = static_cast<int>(region.size());
    if (n < kMinAreaSize || n > kMaxAreaSize) return false;
    int empties = 0;
    for (Coord c : region) empties += pos.at(c) == Cell::Empty;
    return empties == 2 || empties == 3;
}

Pattern region_pattern(const Position& pos, std::span<const Coord> region) {
    std::vector<Coord> black;
    for (Coord c : region)
        if (pos.at(c) == Cell::Black) black.push_back(c);
    return Pattern::from_cells(region, black);
}

namespace {

bool lookup(const SekiDatabase& db, const Position& pos, const EnclosedRegion& r) {
    if (!region_size_filter(pos, r.cells)) return false;
    return db.contains(canonical_key(region_pattern(pos, r.cells)));
}

}  // namespace

QueryResult query(const SekiDatabase& db, const Position& pos, Coord last) {
    QueryResult miss;
    if (!pos.in_bounds(last)) return miss;
    if (pos.at(last) == Cell::White) {
        auto enclosed = pos.enclosed_regions(last);
        if (!enclosed.external_liberty_free) return miss;
        for (const auto& r : enclosed.regions) {
            if (lookup(db, pos, r)) return QueryResult{true, last, r.cells};
        }
        return miss;
    }
    // Inside an area: find a bounding white stone, then the region list of its block.
    std::vector<int> stack{pos.index(last)};
    CellMask seen;
    seen.set(static_cast<std::size_t>(stack.back()));
    std::optional<int> white;
    std::array<int, 4> nb;
    while (!stack.empty() && !white) {
        int cur = stack.back();
        stack.pop_back();
        int k = pos.neighbors(cur, nb);
        for (int j = 0; j < k; ++j) {
            int n = nb[j];
            if (pos.at(n) == Cell::White) {
                white = n;
                break;
            }
            if (!seen.test(static_cast<std::size_t>(n))) {
                seen.set(static_cast<std::size_t>(n));
                stack.push_back(n);
            }
        }
    }
    if (!white) return miss;
    Coord anchor = pos.coord(*white);
    auto enclosed = pos.enclosed_regions(anchor);
    if (!enclosed.external_liberty_free) return miss;
    for (const auto& r : enclosed.regions) {
        if (std::find(r.cells.begin(), r.cells.end(), last) == r.cells.end()) continue;
        if (lookup(db, pos, r)) return QueryResult{true, anchor, r.cells};
        return miss;
    }
    return miss;
}

}  // namespace seki
