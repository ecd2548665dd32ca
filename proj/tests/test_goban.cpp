#include "seki/goban.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace seki;

namespace {

Position board(std::string_view text) { return Position::from_text(text); }

// Plays random legal moves for both sides, passing when stuck.
Board random_game(int w, int h, int moves, std::mt19937& rng) {
    Board b(w, h);
    for (int i = 0; i < moves; ++i) {
        std::uniform_int_distribution<int> col(0, w - 1), row(0, h - 1);
        bool played = false;
        for (int tries = 0; tries < 20 && !played; ++tries) played = b.play(Move::at(col(rng), row(rng))) == MoveStatus::Ok;
        if (!played) b.play(Move::pass());
    }
    return b;
}

}  // namespace

TEST_CASE("single stone on an empty board") {
    Board b(5, 5);
    CHECK(b.play(Move::at(2, 2), Color::Black) == MoveStatus::Ok);
    CHECK(b.at({2, 2}) == Cell::Black);
    CHECK(b.position().stone_count(Color::Black) == 1);
    CHECK(b.position().last_captures() == 0);
    CHECK(b.to_move() == Color::White);
}

TEST_CASE("filling the last liberty captures") {
    Position p = board("3 3 B\n.O.\n.XX\n...\n");
    CHECK(p.play(Move::at(0, 0)) == MoveStatus::Ok);
    CHECK(p.play(Move::pass()) == MoveStatus::Ok);
    CHECK(p.play(Move::at(2, 0)) == MoveStatus::Ok);
    CHECK(p.at({1, 0}) == Cell::Empty);
    CHECK(p.at({2, 0}) == Cell::Black);
    CHECK(p.last_captures() == 1);
}

TEST_CASE("playing into a solid eye is suicide") {
    Position p = board("4 3 B\nOOO.\nO.O.\nOOO.\n");
    Position before = p;
    CHECK(p.play(Move::at(1, 1)) == MoveStatus::Suicide);
    CHECK(p == before);
}

TEST_CASE("capture takes precedence over suicide") {
    // Black at the centre has no liberties of its own but removes the white stone.
    Position p = board("4 3 B\n.XO.\nXO.O\n.XO.\n");
    CHECK(p.play(Move::at(2, 1)) == MoveStatus::Ok);
    CHECK(p.at({1, 1}) == Cell::Empty);
    CHECK(p.at({2, 1}) == Cell::Black);
}

TEST_CASE("occupied, out of bounds and wrong colour") {
    Board b(3, 3);
    CHECK(b.play(Move::at(1, 1)) == MoveStatus::Ok);
    CHECK(b.play(Move::at(1, 1)) == MoveStatus::Occupied);
    CHECK(b.play(Move::at(3, 0)) == MoveStatus::OutOfBounds);
    CHECK(b.play(Move::at(-1, 0)) == MoveStatus::OutOfBounds);
    CHECK_THROWS_AS(b.play(Move::at(0, 0), Color::Black), std::logic_error);
}

TEST_CASE("passes count and reset") {
    Board b(3, 3);
    b.play(Move::pass());
    b.play(Move::pass());
    CHECK(b.consecutive_passes() == 2);
    b.play(Move::at(0, 0));
    CHECK(b.consecutive_passes() == 0);
}

TEST_CASE("ko recapture is a repetition") {
    Board b = Board::from_text("4 3 B\n.XO.\nX.XO\n.XO.\n");
    CHECK(b.play(Move::pass()) == MoveStatus::Ok);
    CHECK(b.play(Move::at(1, 1)) == MoveStatus::Ok);  // white takes the ko
    CHECK(b.at({2, 1}) == Cell::Empty);
    CHECK(b.play(Move::at(2, 1)) == MoveStatus::Superko);
    CHECK(b.play(Move::pass()) == MoveStatus::Ok);
}

TEST_CASE("blocks") {
    CHECK(Position(5, 5).blocks(Color::Black).empty());

    Position diag = board("3 3 B\nX..\n.X.\n...\n");
    CHECK(diag.blocks(Color::Black).size() == 2);

    Position corridor = board("7 3 B\nOOOOOOO\nO.XXX.O\nOOOOOOO\n");
    auto bl = corridor.blocks(Color::Black);
    REQUIRE(bl.size() == 1);
    CHECK(bl[0].stones.size() == 3);
    CHECK(bl[0].liberties == std::vector<Coord>{{1, 1}, {5, 1}});
}

TEST_CASE("enclosed regions") {
    SUBCASE("sealed ring") {
        Position p = board("7 5 B\nXXXXXX.\nXOOOOOX\nXO...OX\nXOOOOOX\nXXXXXXX\n");
        auto e = p.enclosed_regions({1, 1});
        REQUIRE(e.regions.size() == 1);
        CHECK(e.regions[0].cells.size() == 3);
        CHECK(e.external_liberty_free);
    }
    SUBCASE("ring with an outside liberty") {
        Position p = board("7 5 B\nXXXXXX.\nXOOOOOX\nXO...OX\nXOOOOO.\nXXXXXXX\n");
        auto e = p.enclosed_regions({1, 1});
        REQUIRE(e.regions.size() == 1);
        CHECK(e.regions[0].cells.size() == 3);
        CHECK_FALSE(e.external_liberty_free);
    }
    SUBCASE("regions need a single enclosing block") {
        CHECK(board("4 3 B\nOOOO\nO..O\nOOOO\n").enclosed_regions({0, 0}).regions.size() == 1);
        CHECK(board("4 3 B\n.OO.\nO..O\n.OO.\n").enclosed_regions({1, 0}).regions.empty());
    }
    SUBCASE("regions touching the edge are not enclosed") {
        CHECK(board("4 3 B\nOOOO\nO...\nOOOO\n").enclosed_regions({0, 0}).regions.empty());
    }
    SUBCASE("no white stones") { CHECK(Position(4, 4).blocks(Color::White).empty()); }
}

TEST_CASE("text round trip") {
    std::string text = "5 3 W\n.XO..\nXXO.O\n..OO.\n";
    Position p = board(text);
    CHECK(p.to_text() == text);
    CHECK(p.to_move() == Color::White);
    CHECK_THROWS_AS(board(""), ParseError);
    CHECK_THROWS_AS(board("2 2 B\n..\n"), ParseError);
    CHECK_THROWS_AS(board("2 2 Q\n..\n..\n"), ParseError);
    CHECK_THROWS_AS(board("2 2 B\n.a\n..\n"), ParseError);
    CHECK_THROWS_AS(board("3 3 B\nOX.\nX..\n...\n"), ParseError);  // white stone without liberties
}

TEST_CASE("coordinates") {
    CHECK(to_string(Coord{3, 4}) == "3,4");
    CHECK(parse_coord("3,4") == Coord{3, 4});
    CHECK_FALSE(parse_coord("3;4"));
    CHECK_FALSE(parse_coord("a,1"));
    CHECK_FALSE(parse_coord(""));
}

TEST_CASE("position keys") {
    Board b(5, 5);
    CHECK(position_key(b) == position_key(b));

    std::mt19937 rng(7);
    Board g = random_game(5, 5, 30, rng);
    Board rebuilt(g.position());
    CHECK(position_key(rebuilt) == position_key(g));
    CHECK(g.position().compute_key() == g.key());

    Position a = board("3 3 B\n...\n.X.\n...\n");
    Position w = board("3 3 W\n...\n.X.\n...\n");
    CHECK(a.key() != w.key());
}

TEST_CASE("no key collisions among distinct random positions") {
    std::mt19937 rng(11);
    std::map<std::uint64_t, std::string> seen;
    int distinct = 0;
    for (int i = 0; i < 10000; ++i) {
        Position p(5, 5, rng() % 2 ? Color::Black : Color::White);
        for (int c = 0; c < 25; ++c) p.set(p.coord(c), static_cast<Cell>(rng() % 3));
        std::string id = p.to_text();
        auto [it, fresh] = seen.emplace(p.key(), id);
        if (fresh) ++distinct;
        else CHECK(it->second == id);
    }
    CHECK(distinct > 9900);
}

TEST_CASE("random play keeps the board legal") {
    std::mt19937 rng(3);
    for (int game = 0; game < 200; ++game) {
        int w = 2 + static_cast<int>(rng() % 6), h = 2 + static_cast<int>(rng() % 6);
        Board b = random_game(w, h, 60, rng);
        const Position& p = b.position();
        CHECK_FALSE(p.has_dead_block());
        CHECK(p.compute_key() == p.key());
        for (Color c : {Color::Black, Color::White}) {
            std::set<Coord> all;
            for (const auto& blk : p.blocks(c)) {
                CHECK_FALSE(blk.liberties.empty());
                for (Coord s : blk.stones) CHECK(all.insert(s).second);
            }
            CHECK(static_cast<int>(all.size()) == p.stone_count(c));
        }
        for (const auto& blk : p.blocks(Color::White)) {
            auto e = p.enclosed_regions(blk.stones.front());
            std::set<Coord> cells;
            for (const auto& r : e.regions)
                for (Coord c : r.cells) {
                    CHECK(p.at(c) != Cell::White);
                    CHECK(cells.insert(c).second);
                }
        }
    }
}
