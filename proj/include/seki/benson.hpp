#pragma once

#include "seki/goban.hpp"

#include <vector>

namespace seki {

struct UcaReport {
    std::vector<Block> alive_blocks;
    // vital_regions[i] are the regions proven vital to alive_blocks[i].
    std::vector<std::vector<std::vector<Coord>>> vital_regions;

    bool empty() const noexcept { return alive_blocks.empty(); }
    bool is_alive(Coord stone) const noexcept;
};

// Benson's unconditional life. Regions are maximal 4-connected sets of cells
// not holding `color` stones. A region is vital to a block when every empty
// cell in it is a liberty of that block; blocks with fewer than two vital
// regions enclosed by surviving blocks are discarded until nothing changes.
UcaReport benson_alive(const Position& pos, Color color);
inline UcaReport benson_alive(const Board& b, Color color) { return benson_alive(b.position(), color); }

// Stones of `color` belonging to unconditionally alive blocks. Same fixed
// point as benson_alive without building the report; meant for search loops.
CellMask benson_alive_mask(const Position& pos, Color color);

}  // namespace seki
