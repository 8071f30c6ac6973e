#include "bsurf/surface.hpp"
#include "bsurf/union_find.hpp"

#include <set>
#include <stdexcept>

namespace bsurf {

long long GluedSurface::total_chi() const {
  long long s = 0;
  for (const auto& c : components) s += c.chi;
  return s;
}

int side_end_corner(const Sector& s, int side, int end) {
  int n = static_cast<int>(s.sides.size());
  int start = side, finish = (side + 1) % n;
  bool forward = s.sides[side].dir > 0;
  return (end == 0) == forward ? start : finish;
}

GluedSurface glue_faces(const BranchedSurface& b, const std::vector<int>& face_sector, const std::vector<SideGluing>& gluings) {
  GluedSurface g;
  int nf = static_cast<int>(face_sector.size());
  g.face_sector = face_sector;
  g.corner_offset.resize(nf + 1, 0);
  g.partner.resize(nf);
  for (int f = 0; f < nf; ++f) {
    const Sector& s = b.sectors[face_sector[f]];
    g.corner_offset[f + 1] = g.corner_offset[f] + static_cast<int>(s.corners.size());
    g.partner[f].assign(s.sides.size(), {-1, -1});
  }
  UnionFind corners(g.corner_offset[nf]);
  UnionFind faces(nf);
  std::vector<bool> twisted(nf, false);
  for (const SideGluing& gl : gluings) {
    const Sector& sa = b.sectors[face_sector[gl.face_a]];
    const Sector& sb = b.sectors[face_sector[gl.face_b]];
    if (sa.sides[gl.side_a].edge != sb.sides[gl.side_b].edge) throw std::logic_error("gluing sides over different edges");
    if (g.partner[gl.face_a][gl.side_a].first >= 0 || g.partner[gl.face_b][gl.side_b].first >= 0)
      throw std::logic_error("side glued twice");
    if (gl.face_a == gl.face_b && gl.side_a == gl.side_b) throw std::logic_error("side glued to itself");
    g.partner[gl.face_a][gl.side_a] = {gl.face_b, gl.side_b};
    g.partner[gl.face_b][gl.side_b] = {gl.face_a, gl.side_a};
    for (int end = 0; end < 2; ++end)
      corners.unite(g.corner_offset[gl.face_a] + side_end_corner(sa, gl.side_a, end),
                    g.corner_offset[gl.face_b] + side_end_corner(sb, gl.side_b, end));
    // coherent orientations traverse a shared side in opposite directions
    int same = sa.sides[gl.side_a].dir == sb.sides[gl.side_b].dir ? 1 : 0;
    if (!faces.unite(gl.face_a, gl.face_b, same)) twisted[gl.face_a] = true;
  }
  int ncomp = 0;
  g.face_component = faces.labels(&ncomp);
  g.components.resize(ncomp);
  g.face_parity.resize(nf);
  for (int f = 0; f < nf; ++f) {
    int par = 0;
    faces.find(f, par);
    g.face_parity[f] = par;
    auto& c = g.components[g.face_component[f]];
    c.faces.push_back(f);
    if (twisted[f]) c.orientable = false;
  }
  g.corner_point = corners.labels(&g.point_count);
  g.point_quarters.assign(g.point_count, 0);
  g.point_on_boundary.assign(g.point_count, false);
  for (int f = 0; f < nf; ++f) {
    const Sector& s = b.sectors[face_sector[f]];
    for (int m = 0; m < static_cast<int>(s.corners.size()); ++m) g.point_quarters[g.point_of(f, m)] += quarters(s.corners[m]);
  }
  // boundary circles: free sides chained through shared points
  std::vector<std::pair<int, int>> free_sides;
  for (int f = 0; f < nf; ++f)
    for (int m = 0; m < static_cast<int>(g.partner[f].size()); ++m)
      if (g.partner[f][m].first < 0) free_sides.push_back({f, m});
  UnionFind chain(static_cast<int>(free_sides.size()));
  std::vector<int> first_at_point(g.point_count, -1);
  for (int i = 0; i < static_cast<int>(free_sides.size()); ++i) {
    auto [f, m] = free_sides[i];
    const Sector& s = b.sectors[face_sector[f]];
    int n = static_cast<int>(s.sides.size());
    for (int corner : {m, (m + 1) % n}) {
      int p = g.point_of(f, corner);
      g.point_on_boundary[p] = true;
      if (first_at_point[p] < 0) first_at_point[p] = i;
      else chain.unite(first_at_point[p], i);
    }
  }
  std::vector<std::set<int>> circles(ncomp);
  for (int i = 0; i < static_cast<int>(free_sides.size()); ++i) {
    int c = g.face_component[free_sides[i].first];
    circles[c].insert(chain.find(i));
    g.components[c].free_sides++;
  }
  for (int c = 0; c < ncomp; ++c) {
    auto& comp = g.components[c];
    comp.boundary_circles = static_cast<int>(circles[c].size());
    std::set<int> points;
    long long faces_n = 0, sides = 0, closed = 0;
    for (int f : comp.faces) {
      const Sector& s = b.sectors[face_sector[f]];
      if (s.kind == SectorKind::Closed) {
        closed += 2 - 2 * s.genus;
        continue;
      }
      ++faces_n;
      sides += static_cast<long long>(s.sides.size());
      for (int m = 0; m < static_cast<int>(s.corners.size()); ++m) points.insert(g.point_of(f, m));
    }
    // each glued side is counted from both faces
    long long edges = (sides + comp.free_sides) / 2;
    comp.chi = static_cast<long long>(points.size()) - edges + faces_n + closed;
  }
  return g;
}

} // namespace bsurf
