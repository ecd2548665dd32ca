#include "seki/shape_enum.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace seki;

namespace {

using Cells = std::vector<std::pair<int, int>>;

Cells normalized(Cells c) {
    int mc = 1 << 20, mr = 1 << 20;
    for (auto [x, y] : c) mc = std::min(mc, x), mr = std::min(mr, y);
    for (auto& [x, y] : c) x -= mc, y -= mr;
    std::sort(c.begin(), c.end());
    return c;
}

// Smallest image under the eight square symmetries, as sorted cell lists.
Cells naive_canonical(const Cells& c) {
    Cells best;
    for (int t = 0; t < 8; ++t) {
        Cells img;
        for (auto [x, y] : c) {
            int a = x, b = y;
            if (t & 1) a = -a;
            if (t & 2) b = -b;
            if (t & 4) std::swap(a, b);
            img.emplace_back(a, b);
        }
        img = normalized(img);
        if (t == 0 || img < best) best = img;
    }
    return best;
}

bool connected(const Cells& c) {
    std::set<std::pair<int, int>> all(c.begin(), c.end()), seen{c.front()};
    std::vector<std::pair<int, int>> stack{c.front()};
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        for (auto n : Cells{{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}})
            if (all.contains(n) && seen.insert(n).second) stack.push_back(n);
    }
    return seen.size() == c.size();
}

// Free polyominoes by brute force over every n-subset of an n x n grid.
std::size_t brute_force_shape_count(int n) {
    std::set<Cells> classes;
    std::vector<int> pick(static_cast<std::size_t>(n * n), 0);
    std::fill(pick.end() - n, pick.end(), 1);
    do {
        Cells c;
        for (int i = 0; i < n * n; ++i)
            if (pick[static_cast<std::size_t>(i)]) c.emplace_back(i % n, i / n);
        if (connected(c)) classes.insert(naive_canonical(c));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return classes.size();
}

Pattern random_pattern(std::mt19937& rng, int n) {
    auto shapes = enumerate_shapes(n);
    const Shape& s = shapes[rng() % shapes.size()];
    auto pats = enumerate_patterns(s);
    return pats[rng() % pats.size()];
}

}  // namespace

TEST_CASE("shape counts") {
    const std::size_t expected[] = {1, 1, 2, 5, 12, 35, 108, 369};
    for (int n = 1; n <= 8; ++n) CHECK(enumerate_shapes(n).size() == expected[n - 1]);
    for (int n = 1; n <= 5; ++n) CHECK(enumerate_shapes(n).size() == brute_force_shape_count(n));
    CHECK_THROWS_AS(enumerate_shapes(0), SizeOutOfRange);
    CHECK_THROWS_AS(enumerate_shapes(9), SizeOutOfRange);
}

TEST_CASE("shapes are pairwise distinct under symmetry") {
    for (int n = 1; n <= 7; ++n) {
        std::set<Cells> seen;
        for (const Shape& s : enumerate_shapes(n)) {
            Cells c;
            for (Coord x : s.cells()) c.emplace_back(x.col, x.row);
            CHECK(s.connected());
            CHECK(s.size() == n);
            CHECK(seen.insert(naive_canonical(c)).second);
        }
    }
}

TEST_CASE("enumeration is deterministic") { CHECK(enumerate_shapes(6) == enumerate_shapes(6)); }

TEST_CASE("fill counts") {
    const std::size_t expected[] = {20, 35, 56, 84};
    for (int n = 5; n <= 8; ++n)
        for (const Shape& s : enumerate_shapes(n)) {
            auto pats = enumerate_patterns(s);
            CHECK(pats.size() == expected[n - 5]);
            for (const Pattern& p : pats) CHECK((p.empty_count() == 2 || p.empty_count() == 3));
        }
    CHECK_THROWS_AS(enumerate_patterns(enumerate_shapes(4).front()), SizeOutOfRange);
}

TEST_CASE("straight five collapses under reflection") {
    Shape line = corridor("eeeee").shape();
    auto pats = enumerate_patterns(line);
    std::set<CanonicalKey> keys;
    std::set<Cells> naive;
    for (const Pattern& p : pats) {
        keys.insert(canonical_key(p));
        Cells black, mirrored;
        for (Coord c : p.black_cells()) black.emplace_back(c.col, 0), mirrored.emplace_back(4 - c.col, 0);
        std::sort(black.begin(), black.end());
        std::sort(mirrored.begin(), mirrored.end());
        naive.insert(std::min(black, mirrored));
    }
    CHECK(keys.size() < 20);
    CHECK(keys.size() == naive.size());
}

TEST_CASE("keys ignore rotation and translation") {
    std::vector<Coord> l = {{0, 0}, {0, 1}, {0, 2}, {1, 2}, {2, 2}};
    std::vector<Coord> black = {{0, 1}, {0, 2}};
    Pattern p = Pattern::from_cells(l, black);
    Pattern r = p.transformed(1);
    CHECK(canonical_key(p) == canonical_key(r));

    std::vector<Coord> shifted, shifted_black;
    for (Coord c : l) shifted.push_back({c.col + 2, c.row + 3});
    for (Coord c : black) shifted_black.push_back({c.col + 2, c.row + 3});
    CHECK(canonical_key(Pattern::from_cells(shifted, shifted_black)) == canonical_key(p));
}

TEST_CASE("fills that are not symmetric images get distinct keys") {
    std::vector<Coord> l = {{0, 0}, {0, 1}, {0, 2}, {1, 2}, {2, 2}};
    Pattern a = Pattern::from_cells(l, std::vector<Coord>{{0, 0}, {0, 1}});
    Pattern b = Pattern::from_cells(l, std::vector<Coord>{{0, 0}, {1, 2}});
    CHECK_FALSE(canonical_key(a) == canonical_key(b));
}

TEST_CASE("key equality matches naive symmetry classes") {
    std::mt19937 rng(21);
    for (int i = 0; i < 2000; ++i) {
        int n = 5 + static_cast<int>(rng() % 4);
        Pattern a = random_pattern(rng, n), b = random_pattern(rng, n);
        if (rng() % 2) b = a.transformed(static_cast<int>(rng() % 8));
        // Symmetry acts on both cell sets together; compare the eight images directly.
        bool same = false;
        for (int t = 0; t < 8 && !same; ++t) {
            Pattern img = a.transformed(t);
            same = img.shape().cells() == b.shape().cells() && img.black_cells() == b.black_cells();
        }
        CHECK((canonical_key(a) == canonical_key(b)) == same);
    }
}

TEST_CASE("keys decode back to their pattern") {
    std::mt19937 rng(4);
    for (int i = 0; i < 500; ++i) {
        Pattern p = random_pattern(rng, 5 + static_cast<int>(rng() % 4));
        CanonicalKey k = canonical_key(p);
        Pattern q = pattern_from_key(k);
        CHECK(canonical_key(q) == k);
        CHECK(q.size() == p.size());
        CHECK(q.empty_count() == p.empty_count());
    }
}

TEST_CASE("pattern text") {
    Pattern c = parse_pattern("ebbbe");
    CHECK(c == corridor("ebbbe"));
    Pattern sq = parse_pattern("eb/bb/be");
    CHECK(sq.size() == 6);
    CHECK(sq.empty_count() == 2);
    CHECK(parse_pattern("-e/bb\nbe").size() == 5);
    CHECK_THROWS_AS(parse_pattern("e-e"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("ebz"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern(""), std::invalid_argument);
}
