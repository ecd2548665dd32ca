#include "seki/seki_verifier.hpp"

#include "seki/benson.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <map>
#include <thread>
#include <unordered_map>

namespace seki {

std::optional<LocalPosition> embed(const Pattern& pattern) {
    const Shape& shape = pattern.shape();
    LocalPosition lp{Position(shape.width() + 2, shape.height() + 2), {}, Coord{0, 0}, pattern};
    Position& pos = lp.position;
    for (int r = 0; r < pos.height(); ++r)
        for (int c = 0; c < pos.width(); ++c) pos.set(Coord{c, r}, Cell::White);
    auto black = pattern.black_cells();
    for (Coord c : shape.cells()) {
        Coord at{c.col + 1, c.row + 1};
        bool is_black = std::find(black.begin(), black.end(), c) != black.end();
        pos.set(at, is_black ? Cell::Black : Cell::Empty);
        lp.area.push_back(at);
    }
    int white_cells = pos.stone_count(Color::White);
    if (static_cast<int>(pos.block_mask(0).count()) != white_cells) return std::nullopt;
    if (pos.has_dead_block()) return std::nullopt;
    return lp;
}

std::string_view to_string(LocalOutcome o) {
    switch (o) {
    case LocalOutcome::Seki: return "Seki";
    case LocalOutcome::BlackKills: return "BlackKills";
    case LocalOutcome::WhiteLives: return "WhiteLives";
    case LocalOutcome::IllegalPattern: return "IllegalPattern";
    }
    return "?";
}

namespace {

class LocalSearch {
public:
    LocalSearch(const LocalPosition& lp, Color attacker, AttackOptions options)
        : lp_(lp), attacker_(attacker), options_(options) {
        for (Coord c : lp.area) moves_.push_back(Move::at(c));
    }

    AttackResult run() {
        AttackResult result;
        const Position& root = lp_.position;
        path_.push_back(root.key());
        if (auto t = terminal(root)) {
            result.attacker_wins = *t;
            result.nodes = 1;
            return result;
        }
        ++nodes_;
        for (const Move& m : moves_) {
            Position child = root;
            if (child.play(m) != MoveStatus::Ok) continue;
            path_.push_back(child.key());
            Value v = search(child, 1);
            path_.pop_back();
            if (v.attacker_wins) {
                result.attacker_wins = true;
                result.first_move = m;
                break;
            }
        }
        result.nodes = nodes_;
        return result;
    }

private:
    struct Value {
        bool attacker_wins;
        int depends_on;  // shallowest path ply whose repetition shaped the result
    };

    // Attacker's win/loss if the game is over at `p`.
    std::optional<bool> terminal(const Position& p) const {
        if (lp_.enclosure_captured(p)) return attacker_ == Color::Black;
        if (benson_alive_mask(p, Color::White).test(static_cast<std::size_t>(p.index(lp_.enclosure))))
            return attacker_ == Color::White;
        if (p.consecutive_passes() >= 2) return false;
        return std::nullopt;
    }

    std::uint64_t tt_key(const Position& p) const {
        return p.key() ^ (p.consecutive_passes() ? 0x9e3779b97f4a7c15ULL : 0);
    }

    Value search(const Position& pos, int ply) {
        ++nodes_;
        if (auto t = terminal(pos)) return {*t, INT_MAX};
        const std::uint64_t key = tt_key(pos);
        if (options_.use_transposition_table) {
            if (auto it = tt_.find(key); it != tt_.end()) return {it->second, INT_MAX};
        }
        const bool attacker_to_move = pos.to_move() == attacker_;
        Value result{!attacker_to_move, INT_MAX};
        auto consider = [&](const Move& m) {
            Position child = pos;
            if (child.play(m) != MoveStatus::Ok) return false;
            if (!m.is_pass()) {
                auto it = std::find(path_.begin(), path_.end(), child.key());
                if (it != path_.end()) {
                    result.depends_on = std::min(result.depends_on, static_cast<int>(it - path_.begin()));
                    return false;
                }
            }
            path_.push_back(child.key());
            Value v = search(child, ply + 1);
            path_.pop_back();
            result.depends_on = std::min(result.depends_on, v.depends_on);
            // Cutoff once the side to move has found a winning reply.
            if (v.attacker_wins == attacker_to_move) {
                result.attacker_wins = attacker_to_move;
                return true;
            }
            return false;
        };
        bool cut = false;
        for (const Move& m : moves_)
            if ((cut = consider(m))) break;
        if (!cut) consider(Move::pass());
        if (options_.use_transposition_table && result.depends_on >= ply) tt_.emplace(key, result.attacker_wins);
        return result;
    }

    const LocalPosition& lp_;
    Color attacker_;
    AttackOptions options_;
    std::vector<Move> moves_;
    std::vector<std::uint64_t> path_;
    std::unordered_map<std::uint64_t, bool> tt_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

AttackResult attacker_search(const LocalPosition& pos, Color attacker, AttackOptions options) {
    LocalPosition start = pos;
    start.position.set_to_move(attacker);
    return LocalSearch(start, attacker, options).run();
}

LocalOutcome verify_local_outcome(const Pattern& pattern) {
    auto lp = embed(pattern);
    if (!lp) return LocalOutcome::IllegalPattern;
    if (attacker_search(*lp, Color::Black).attacker_wins) return LocalOutcome::BlackKills;
    if (attacker_search(*lp, Color::White).attacker_wins) return LocalOutcome::WhiteLives;
    return LocalOutcome::Seki;
}

std::vector<Pattern> distinct_patterns(int size) {
    std::map<CanonicalKey, Pattern> unique;
    for (const Shape& s : enumerate_shapes(size))
        for (const Pattern& p : enumerate_patterns(s)) unique.emplace(canonical_key(p), p);
    std::vector<Pattern> out;
    out.reserve(unique.size());
    for (auto& [k, p] : unique) out.push_back(p);
    return out;
}

SekiDatabase build_database(const std::set<int>& sizes, const BuildOptions& options) {
    for (int n : sizes)
        if (n < kMinAreaSize || n > kMaxAreaSize) throw SizeOutOfRange("database sizes must be in [5, 8]");
    SekiDatabase db;
    std::vector<DatabaseStats> all_stats;
    for (int n : sizes) {
        auto started = std::chrono::steady_clock::now();
        DatabaseStats stats;
        stats.size = n;
        for (const Shape& s : enumerate_shapes(n)) stats.raw_patterns += enumerate_patterns(s).size();
        const auto patterns = distinct_patterns(n);
        std::vector<LocalOutcome> outcomes(patterns.size(), LocalOutcome::IllegalPattern);

        // Workers pull indices; each verification keeps private search state.
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < patterns.size();) outcomes[i] = verify_local_outcome(patterns[i]);
        };
        const int threads = std::max(1, options.threads);
        if (threads == 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        }

        for (std::size_t i = 0; i < patterns.size(); ++i) {
            switch (outcomes[i]) {
            case LocalOutcome::IllegalPattern: ++stats.illegal_patterns; break;
            case LocalOutcome::Seki:
                ++stats.seki_count;
                ++stats.pattern_count;
                db.insert(canonical_key(patterns[i]));
                break;
            default: ++stats.pattern_count; break;
            }
        }
        stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        if (options.on_size_done) options.on_size_done(stats);
        all_stats.push_back(stats);
    }
    db.set_stats(std::move(all_stats));
    return db;
}

}  // namespace seki
