#include "bsurf/carried.hpp"

namespace bsurf {

namespace {
constexpr long long kSheetLimit = 2000000;
}

CarriedSurface reconstruct_surface(const BranchedSurface& b, const Weights& w) {
  require_valid(b);
  require_solution(b, w);
  CarriedSurface cs;
  long long total = 0;
  for (int s = 0; s < b.sector_count(); ++s) {
    cs.sheet_offset.push_back(total);
    total += w[s];
    if (total > kSheetLimit) throw DomainError("weights too large to reconstruct");
  }
  std::vector<int> face_sector;
  face_sector.reserve(total);
  for (int s = 0; s < b.sector_count(); ++s)
    for (long long p = 1; p <= w[s]; ++p) {
      cs.sheets.push_back({s, p});
      face_sector.push_back(s);
    }
  for (const BranchEdge& e : b.edges) {
    const SlotRef &ti = e.top(), &tj = e.bottom(), &tk = e.lower();
    long long wi = w[ti.sector], wj = w[tj.sector], wk = w[tk.sector];
    for (long long p = 1; p <= wk; ++p) {
      int lower = cs.sheet_index(tk.sector, frame_position(p, wk, tk.flip));
      SideGluing g;
      g.face_a = lower;
      g.side_a = tk.side;
      if (p <= wi) {
        g.face_b = cs.sheet_index(ti.sector, frame_position(p, wi, ti.flip));
        g.side_b = ti.side;
      } else {
        g.face_b = cs.sheet_index(tj.sector, frame_position(p - wi, wj, tj.flip));
        g.side_b = tj.side;
      }
      cs.gluings.push_back(g);
    }
  }
  cs.surface = glue_faces(b, face_sector, cs.gluings);
  return cs;
}

} // namespace bsurf
