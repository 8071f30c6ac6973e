#pragma once

#include "bsurf/solution.hpp"
#include "bsurf/surface.hpp"

namespace bsurf {

struct Sheet {
  int sector = 0;
  long long position = 1;  // 1 = top of the sector's stack in its own frame
};

// The surface carried with weights w, glued in fiber order.
struct CarriedSurface {
  std::vector<Sheet> sheets;
  std::vector<long long> sheet_offset;  // first sheet index per sector
  std::vector<SideGluing> gluings;
  GluedSurface surface;

  int sheet_index(int sector, long long position) const {
    return static_cast<int>(sheet_offset[sector] + position - 1);
  }
  int component_count() const { return static_cast<int>(surface.components.size()); }
  long long total_chi() const { return surface.total_chi(); }
};

// Position in the edge frame of sheet `pos` of a stack of height w.
inline long long frame_position(long long pos, long long w, bool flip) { return flip ? w + 1 - pos : pos; }

CarriedSurface reconstruct_surface(const BranchedSurface& b, const Weights& w);

} // namespace bsurf
