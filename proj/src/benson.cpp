#include "seki/benson.hpp"

#include <algorithm>

namespace seki {

namespace {

struct Analysis {
    std::array<std::int16_t, kMaxCells> block_id{};
    std::array<std::int16_t, kMaxCells> region_id{};
    int block_count = 0;
    int region_count = 0;
    std::vector<std::vector<int>> region_adjacent;  // blocks bordering each region
    std::vector<std::vector<int>> region_vital;     // blocks each region is vital to
    std::vector<std::uint8_t> block_alive;
    std::vector<std::uint8_t> region_alive;
};

void label(const Position& pos, Color color, Analysis& a) {
    const Cell own = stone(color);
    const int n = pos.size();
    a.block_id.fill(-1);
    a.region_id.fill(-1);
    std::array<int, kMaxCells> stack;
    std::array<int, 4> nb;
    for (int i = 0; i < n; ++i) {
        bool is_own = pos.at(i) == own;
        auto& ids = is_own ? a.block_id : a.region_id;
        if (ids[static_cast<std::size_t>(i)] >= 0) continue;
        int id = is_own ? a.block_count++ : a.region_count++;
        int top = 0;
        stack[top++] = i;
        ids[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(id);
        while (top > 0) {
            int cur = stack[--top];
            int k = pos.neighbors(cur, nb);
            for (int j = 0; j < k; ++j) {
                int m = nb[j];
                if ((pos.at(m) == own) == is_own && ids[static_cast<std::size_t>(m)] < 0) {
                    ids[static_cast<std::size_t>(m)] = static_cast<std::int16_t>(id);
                    stack[top++] = m;
                }
            }
        }
    }

    a.region_adjacent.assign(static_cast<std::size_t>(a.region_count), {});
    a.region_vital.assign(static_cast<std::size_t>(a.region_count), {});
    std::vector<std::uint8_t> has_empty(static_cast<std::size_t>(a.region_count), 0);
    for (int i = 0; i < n; ++i) {
        int r = a.region_id[static_cast<std::size_t>(i)];
        if (r < 0) continue;
        auto& adj = a.region_adjacent[static_cast<std::size_t>(r)];
        std::array<int, 4> around{};
        int around_n = 0;
        int k = pos.neighbors(i, nb);
        for (int j = 0; j < k; ++j) {
            int b = a.block_id[static_cast<std::size_t>(nb[j])];
            if (b < 0) continue;
            if (std::find(adj.begin(), adj.end(), b) == adj.end()) adj.push_back(b);
            around[static_cast<std::size_t>(around_n++)] = b;
        }
        if (pos.at(i) != Cell::Empty) continue;
        auto& vital = a.region_vital[static_cast<std::size_t>(r)];
        auto* first = around.begin();
        auto* last = around.begin() + around_n;
        if (!has_empty[static_cast<std::size_t>(r)]) {
            has_empty[static_cast<std::size_t>(r)] = 1;
            for (auto* p = first; p != last; ++p)
                if (std::find(vital.begin(), vital.end(), *p) == vital.end()) vital.push_back(*p);
        } else {
            std::erase_if(vital, [&](int b) { return std::find(first, last, b) == last; });
        }
    }
    for (int r = 0; r < a.region_count; ++r)
        if (!has_empty[static_cast<std::size_t>(r)]) a.region_vital[static_cast<std::size_t>(r)] = a.region_adjacent[static_cast<std::size_t>(r)];
}

void prune(Analysis& a) {
    a.block_alive.assign(static_cast<std::size_t>(a.block_count), 1);
    a.region_alive.assign(static_cast<std::size_t>(a.region_count), 1);
    std::vector<int> vital_count(static_cast<std::size_t>(a.block_count));
    bool changed = true;
    while (changed) {
        changed = false;
        for (int r = 0; r < a.region_count; ++r) {
            if (!a.region_alive[static_cast<std::size_t>(r)]) continue;
            for (int b : a.region_adjacent[static_cast<std::size_t>(r)]) {
                if (!a.block_alive[static_cast<std::size_t>(b)]) {
                    a.region_alive[static_cast<std::size_t>(r)] = 0;
                    break;
                }
            }
        }
        std::fill(vital_count.begin(), vital_count.end(), 0);
        for (int r = 0; r < a.region_count; ++r) {
            if (!a.region_alive[static_cast<std::size_t>(r)]) continue;
            for (int b : a.region_vital[static_cast<std::size_t>(r)]) ++vital_count[static_cast<std::size_t>(b)];
        }
        for (int b = 0; b < a.block_count; ++b) {
            if (a.block_alive[static_cast<std::size_t>(b)] && vital_count[static_cast<std::size_t>(b)] < 2) {
                a.block_alive[static_cast<std::size_t>(b)] = 0;
                changed = true;
            }
        }
    }
}

}  // namespace

bool UcaReport::is_alive(Coord s) const noexcept {
    for (const auto& b : alive_blocks)
        if (std::find(b.stones.begin(), b.stones.end(), s) != b.stones.end()) return true;
    return false;
}

CellMask benson_alive_mask(const Position& pos, Color color) {
    Analysis a;
    label(pos, color, a);
    CellMask alive;
    if (a.block_count == 0) return alive;
    prune(a);
    for (int i = 0; i < pos.size(); ++i) {
        int b = a.block_id[static_cast<std::size_t>(i)];
        if (b >= 0 && a.block_alive[static_cast<std::size_t>(b)]) alive.set(static_cast<std::size_t>(i));
    }
    return alive;
}

UcaReport benson_alive(const Position& pos, Color color) {
    Analysis a;
    label(pos, color, a);
    UcaReport report;
    if (a.block_count == 0) return report;
    prune(a);
    std::vector<int> report_index(static_cast<std::size_t>(a.block_count), -1);
    for (int i = 0; i < pos.size(); ++i) {
        int b = a.block_id[static_cast<std::size_t>(i)];
        if (b < 0 || !a.block_alive[static_cast<std::size_t>(b)] || report_index[static_cast<std::size_t>(b)] >= 0) continue;
        report_index[static_cast<std::size_t>(b)] = static_cast<int>(report.alive_blocks.size());
        report.alive_blocks.push_back(pos.block_at(pos.coord(i)));
        report.vital_regions.emplace_back();
    }
    for (int r = 0; r < a.region_count; ++r) {
        if (!a.region_alive[static_cast<std::size_t>(r)]) continue;
        std::vector<Coord> cells;
        for (int i = 0; i < pos.size(); ++i)
            if (a.region_id[static_cast<std::size_t>(i)] == r) cells.push_back(pos.coord(i));
        for (int b : a.region_vital[static_cast<std::size_t>(r)]) {
            int idx = report_index[static_cast<std::size_t>(b)];
            if (idx >= 0) report.vital_regions[static_cast<std::size_t>(idx)].push_back(cells);
        }
    }
    return report;
}

}  // namespace seki
