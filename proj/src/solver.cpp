#include "seki/solver.hpp"

#include "seki/benson.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdio>
#include <unordered_map>

namespace seki {

std::string_view to_string(GameValue v) {
    switch (v) {
    case GameValue::WhiteWin: return "WhiteWin";
    case GameValue::BlackWin: return "BlackWin";
    case GameValue::Unknown: return "Unknown";
    }
    return "?";
}

TerminalInfo terminal_check(const Position& pos, const SekiDatabase* db) {
    const auto& last = pos.last_move();
    if (db && last && !last->is_pass() && query(*db, pos, last->coord()).hit) return {Terminal::WhiteWin, true};
    if (benson_alive_mask(pos, Color::White).any()) return {Terminal::WhiteWin, false};
    const bool white_on_board = pos.stone_count(Color::White) > 0;
    if (!white_on_board && last) {
        const bool black_moved = pos.to_move() == Color::White;
        if (pos.consecutive_passes() >= 2) return {Terminal::BlackWin, false};
        if (black_moved && !last->is_pass() && pos.last_captures() > 0) return {Terminal::BlackWin, false};
        if (!black_moved && last->is_pass()) return {Terminal::BlackWin, false};
    }
    if (pos.consecutive_passes() >= 2) return {white_on_board ? Terminal::WhiteWin : Terminal::BlackWin, false};
    return {};
}

namespace {

struct LimitReached {};

class Solver {
public:
    Solver(const Board& board, const SolveLimits& limits, const SekiDatabase* db)
        : root_(board), limits_(limits), db_(db), path_(board.history()) {}

    SolveResult run() {
        started_ = std::chrono::steady_clock::now();
        SolveResult r;
        try {
            const int root_ply = static_cast<int>(path_.size()) - 1;
            pv_.resize(64);
            Value v = search(root_.position(), root_ply);
            Color mover = root_.to_move();
            Color winner = v.mover_wins ? mover : opponent(mover);
            r.value = winner == Color::White ? GameValue::WhiteWin : GameValue::BlackWin;
            r.principal_variation = pv_[static_cast<std::size_t>(root_ply)];
        } catch (const LimitReached&) {
            r.value = GameValue::Unknown;
        }
        r.nodes = nodes_;
        r.terminal_nodes = terminal_nodes_;
        r.db_hits = db_hits_;
        r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count();
        return r;
    }

private:
    struct Value {
        bool mover_wins;
        int depends_on;  // shallowest path ply whose repetition shaped the result
    };

    void tick() {
        ++nodes_;
        if (nodes_ > limits_.max_nodes) throw LimitReached{};
        if ((nodes_ & 1023) == 0 &&
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count() > limits_.max_seconds)
            throw LimitReached{};
    }

    std::uint64_t tt_key(const Position& p) const {
        std::uint64_t k = p.key();
        if (p.consecutive_passes()) k ^= 0x9e3779b97f4a7c15ULL;
        return k;
    }

    std::vector<Move>& pv_at(int ply) {
        if (static_cast<std::size_t>(ply) >= pv_.size()) pv_.resize(static_cast<std::size_t>(ply) * 2 + 2);
        return pv_[static_cast<std::size_t>(ply)];
    }

    // Captures, then moves next to the last stone, then the rest, then pass.
    std::vector<Move> ordered_moves(const Position& pos) const {
        std::vector<std::pair<int, Move>> scored;
        std::optional<Coord> last;
        if (pos.last_move() && !pos.last_move()->is_pass()) last = pos.last_move()->coord();
        std::array<int, 4> nb;
        for (int i = 0; i < pos.size(); ++i) {
            if (pos.at(i) != Cell::Empty) continue;
            Coord c = pos.coord(i);
            if (pos.check(c) != MoveStatus::Ok) continue;
            int score = 0;
            int k = pos.neighbors(i, nb);
            for (int j = 0; j < k; ++j) {
                int n = nb[j];
                if (pos.at(n) == stone(opponent(pos.to_move())) && pos.liberties_of(pos.block_mask(n)).count() == 1)
                    score = std::max(score, 2);
                if (last && pos.coord(n) == *last) score = std::max(score, 1);
            }
            scored.emplace_back(-score, Move::at(c));
        }
        std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Move> moves;
        moves.reserve(scored.size() + 1);
        for (auto& [s, m] : scored) moves.push_back(m);
        moves.push_back(Move::pass());
        return moves;
    }

    Value search(const Position& pos, int ply) {
        tick();
        pv_at(ply).clear();
        TerminalInfo t = terminal_check(pos, db_);
        if (t.status != Terminal::NonTerminal) {
            ++terminal_nodes_;
            if (t.db_hit) ++db_hits_;
            Color winner = t.status == Terminal::WhiteWin ? Color::White : Color::Black;
            return {winner == pos.to_move(), INT_MAX};
        }
        const std::uint64_t key = tt_key(pos);
        if (limits_.use_transposition_table) {
            if (auto it = tt_.find(key); it != tt_.end()) return {it->second, INT_MAX};
        }
        Value result{false, INT_MAX};
        bool have_line = false;
        for (const Move& m : ordered_moves(pos)) {
            Position child = pos;
            if (child.play(m) != MoveStatus::Ok) continue;
            if (!m.is_pass()) {
                auto it = std::find(path_.begin(), path_.end(), child.key());
                if (it != path_.end()) {
                    result.depends_on = std::min(result.depends_on, static_cast<int>(it - path_.begin()));
                    continue;
                }
            }
            path_.push_back(child.key());
            Value v = search(child, ply + 1);
            path_.pop_back();
            result.depends_on = std::min(result.depends_on, v.depends_on);
            if (!v.mover_wins || !have_line) {
                std::vector<Move> rest = pv_at(ply + 1);
                auto& line = pv_at(ply);
                line.assign(1, m);
                line.insert(line.end(), rest.begin(), rest.end());
                have_line = true;
            }
            if (!v.mover_wins) {
                result.mover_wins = true;
                break;
            }
        }
        if (limits_.use_transposition_table && result.depends_on >= ply && tt_.size() < limits_.transposition_table_capacity)
            tt_.emplace(key, result.mover_wins);
        return result;
    }

    const Board& root_;
    SolveLimits limits_;
    const SekiDatabase* db_;
    std::vector<std::uint64_t> path_;
    std::vector<std::vector<Move>> pv_;
    std::unordered_map<std::uint64_t, bool> tt_;
    std::chrono::steady_clock::time_point started_;
    std::uint64_t nodes_ = 0;
    std::uint64_t terminal_nodes_ = 0;
    std::uint64_t db_hits_ = 0;
};

}  // namespace

SolveResult solve(const Board& board, const SolveLimits& limits, const SekiDatabase* db) {
    return Solver(board, limits, db).run();
}

HitRateReport hit_rate(const SolveResult& result) {
    if (result.terminal_nodes == 0) throw UndefinedHitRate("hit rate is undefined without terminal nodes");
    return {static_cast<double>(result.db_hits) / static_cast<double>(result.terminal_nodes),
            result.value != GameValue::Unknown};
}

std::string format_result(const SolveResult& r) {
    char rate[32] = "null";
    if (r.terminal_nodes > 0) std::snprintf(rate, sizeof rate, "%.6f", hit_rate(r).hit_rate);
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "{\"value\": \"%s\", \"nodes\": %llu, \"terminal_nodes\": %llu, \"db_hits\": %llu, "
                  "\"elapsed_seconds\": %.3f, \"hit_rate\": %s}",
                  std::string(to_string(r.value)).c_str(), static_cast<unsigned long long>(r.nodes),
                  static_cast<unsigned long long>(r.terminal_nodes), static_cast<unsigned long long>(r.db_hits),
                  r.elapsed_seconds, rate);
    return buf;
}

}  // namespace seki
