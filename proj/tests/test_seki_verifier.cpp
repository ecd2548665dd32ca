#include "local_oracle.hpp"
#include "seki/seki_verifier.hpp"

#include <doctest.h>

#include <random>

using namespace seki;

namespace {

std::vector<Coord> white_liberties(const LocalPosition& lp) {
    return lp.position.block_at(lp.enclosure).liberties;
}

oracle::Verdict oracle_verdict(const Pattern& p) {
    auto w = oracle::wall_in(p.shape().cells(), p.black_cells());
    return oracle::classify(w);
}

LocalOutcome as_outcome(oracle::Verdict v) {
    switch (v) {
    case oracle::Verdict::Seki: return LocalOutcome::Seki;
    case oracle::Verdict::BlackKills: return LocalOutcome::BlackKills;
    case oracle::Verdict::WhiteLives: return LocalOutcome::WhiteLives;
    }
    return LocalOutcome::IllegalPattern;
}

}  // namespace

TEST_CASE("corridor embeddings") {
    auto lp = embed(corridor("ebbbe"));
    REQUIRE(lp);
    CHECK(lp->position.width() == 7);
    CHECK(lp->position.height() == 3);
    CHECK(white_liberties(*lp) == std::vector<Coord>{{1, 1}, {5, 1}});
    CHECK(lp->area.size() == 5);

    auto lp2 = embed(corridor("eebbb"));
    REQUIRE(lp2);
    CHECK(white_liberties(*lp2) == std::vector<Coord>{{1, 1}, {2, 1}});
}

TEST_CASE("every fill of a simply connected area embeds") {
    // Each black block of a connected area borders one of its empties, so
    // only areas with holes are rejected.
    for (int n = 5; n <= 7; ++n)
        for (const Shape& s : enumerate_shapes(n)) {
            bool holed = false;
            for (const Pattern& p : enumerate_patterns(s)) {
                auto lp = embed(p);
                if (!lp) {
                    holed = true;
                    continue;
                }
                CHECK_FALSE(lp->position.has_dead_block());
                CHECK(lp->position.block_mask(lp->position.index(lp->enclosure)).count() ==
                      static_cast<std::size_t>(lp->position.stone_count(Color::White)));
            }
            if (holed) CHECK(n >= 7);
        }
}

TEST_CASE("area with a hole is illegal") {
    Pattern ring = parse_pattern("ebb/b-b/bbe");
    CHECK_FALSE(embed(ring));
    CHECK(verify_local_outcome(ring) == LocalOutcome::IllegalPattern);
}

TEST_CASE("attacker searches on the corridors") {
    auto seki = *embed(corridor("ebbbe"));
    CHECK_FALSE(attacker_search(seki, Color::Black).attacker_wins);
    CHECK_FALSE(attacker_search(seki, Color::White).attacker_wins);

    auto lives = *embed(corridor("eebbb"));
    auto r = attacker_search(lives, Color::White);
    CHECK(r.attacker_wins);
    REQUIRE(r.first_move);
    CHECK_FALSE(r.first_move->is_pass());
}

TEST_CASE("corridor outcomes") {
    CHECK(verify_local_outcome(corridor("ebbbe")) == LocalOutcome::Seki);
    CHECK(verify_local_outcome(corridor("eebbb")) == LocalOutcome::WhiteLives);
    CHECK(verify_local_outcome(corridor("ebebe")) == LocalOutcome::WhiteLives);
    CHECK(verify_local_outcome(corridor("ebbbbe")) == LocalOutcome::Seki);
    CHECK(verify_local_outcome(corridor("eebbbb")) == LocalOutcome::WhiteLives);
    CHECK(to_string(LocalOutcome::BlackKills) == "BlackKills");
}

TEST_CASE("winning first moves are never passes") {
    for (const Pattern& p : distinct_patterns(5)) {
        auto lp = embed(p);
        REQUIRE(lp);
        for (Color c : {Color::Black, Color::White}) {
            auto r = attacker_search(*lp, c);
            if (r.attacker_wins) {
                REQUIRE(r.first_move);
                CHECK_FALSE(r.first_move->is_pass());
            }
        }
    }
}

TEST_CASE("size-6 outcomes agree with the oracle") {
    for (const Pattern& p : distinct_patterns(6)) CHECK(verify_local_outcome(p) == as_outcome(oracle_verdict(p)));
}

TEST_CASE("transposition table does not change outcomes") {
    for (const Pattern& p : distinct_patterns(6)) {
        auto lp = embed(p);
        REQUIRE(lp);
        for (Color c : {Color::Black, Color::White})
            CHECK(attacker_search(*lp, c, {true}).attacker_wins == attacker_search(*lp, c, {false}).attacker_wins);
    }
}

TEST_CASE("outcomes are symmetric") {
    std::mt19937 rng(17);
    auto pats = distinct_patterns(7);
    for (int i = 0; i < 120; ++i) {
        const Pattern& p = pats[rng() % pats.size()];
        LocalOutcome o = verify_local_outcome(p);
        for (int t = 1; t < 8; ++t) CHECK(verify_local_outcome(p.transformed(t)) == o);
    }
}

TEST_CASE("in a seki every first stone loses") {
    SekiDatabase db = build_database({5, 6});
    int checked = 0;
    for (int n : {5, 6})
        for (const CanonicalKey& k : db.sorted_keys(n)) {
            if (checked >= 24) break;
            Pattern p = pattern_from_key(k);
            auto w = oracle::wall_in(p.shape().cells(), p.black_cells());
            auto game = oracle::enclosure_game(w.pos, w.area, w.wall);
            for (Color side : {Color::Black, Color::White})
                for (Coord c : w.area) {
                    Position probe = w.pos;
                    probe.set_to_move(side);
                    if (probe.play(Move::at(c)) != MoveStatus::Ok) continue;
                    CHECK_FALSE(oracle::Minimax(game).attacker_wins_after(side, Move::at(c)));
                }
            ++checked;
        }
    CHECK(checked >= 20);
}

TEST_CASE("database build") {
    SekiDatabase none = build_database({});
    CHECK(none.empty());
    CHECK(none.stats().empty());

    SekiDatabase five = build_database({5});
    CHECK(five.contains(canonical_key(corridor("ebbbe"))));
    CHECK_FALSE(five.contains(canonical_key(corridor("eebbb"))));
    REQUIRE(five.stats().size() == 1);
    const DatabaseStats& s = five.stats()[0];
    CHECK(s.size == 5);
    CHECK(s.raw_patterns == 12 * 20);
    CHECK(s.seki_count == five.size(5));
    CHECK(s.seki_rate() == doctest::Approx(static_cast<double>(s.seki_count) / static_cast<double>(s.pattern_count)));
    CHECK(s.pattern_count == distinct_patterns(5).size() - s.illegal_patterns);

    CHECK_THROWS_AS(build_database({4}), SizeOutOfRange);
    CHECK_THROWS_AS(build_database({9}), SizeOutOfRange);
}

TEST_CASE("builds are deterministic across thread counts") {
    SekiDatabase one = build_database({5, 6}, {1, {}});
    SekiDatabase many = build_database({5, 6}, {3, {}});
    CHECK(one == many);
    REQUIRE(one.stats().size() == many.stats().size());
    for (std::size_t i = 0; i < one.stats().size(); ++i) {
        CHECK(one.stats()[i].pattern_count == many.stats()[i].pattern_count);
        CHECK(one.stats()[i].seki_count == many.stats()[i].seki_count);
    }
    std::vector<int> reported;
    build_database({5, 6}, {2, [&](const DatabaseStats& s) { reported.push_back(s.size); }});
    CHECK(reported == std::vector<int>{5, 6});
}
