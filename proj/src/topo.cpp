#include "bsurf/topo.hpp"
#include "bsurf/union_find.hpp"

#include <algorithm>
#include <map>

namespace bsurf {

Weights OrientationCover::pullback(const Weights& w) const {
  Weights out(sector_map.size());
  for (std::size_t s = 0; s < sector_map.size(); ++s) out[s] = w.at(sector_map[s]);
  return out;
}

OrientationCover orientation_double_cover(const BranchedSurface& b) {
  require_valid(b);
  auto signs = transverse_orientation(b);
  std::vector<int> sheet(b.sector_count(), 1);
  OrientationCover oc;
  oc.trivial = signs.has_value();
  BranchedSurface& c = oc.cover;
  c.name = b.name.empty() ? "" : b.name + "~";
  auto slots = side_slots(b);
  auto cs = [](int s, int eps) { return 2 * s + (eps < 0 ? 1 : 0); };
  auto sgn = [](bool flip) { return flip ? -1 : 1; };
  for (const Sector& s : b.sectors)
    for (int eps : {1, -1}) {
      Sector t = s;
      t.id = cs(s.id, eps);
      for (int m = 0; m < static_cast<int>(t.sides.size()); ++m) {
        const SlotRef& r = b.edges[slots[s.id][m].edge].slots[slots[s.id][m].slot];
        t.sides[m].edge = 2 * t.sides[m].edge + (eps * sgn(r.flip) < 0 ? 1 : 0);
      }
      c.sectors.push_back(std::move(t));
      oc.sector_map.push_back(s.id);
    }
  for (const BranchEdge& e : b.edges)
    for (int d : {1, -1}) {
      BranchEdge t;
      t.id = 2 * e.id + (d < 0 ? 1 : 0);
      t.length = e.length;
      const SlotRef &i = e.top(), &j = e.bottom(), &k = e.lower();
      auto ref = [&](const SlotRef& r, int eps) { return SlotRef{cs(r.sector, eps), r.side, false}; };
      if (d > 0) t.slots = {ref(i, sgn(i.flip)), ref(j, sgn(j.flip)), ref(k, sgn(k.flip))};
      else t.slots = {ref(j, -sgn(j.flip)), ref(i, -sgn(i.flip)), ref(k, -sgn(k.flip))};
      c.edges.push_back(std::move(t));
      oc.edge_map.push_back(e.id);
    }
  // cover corners, joined across the three slots at each edge end
  std::vector<int> off(c.sector_count() + 1, 0);
  for (int s = 0; s < c.sector_count(); ++s) off[s + 1] = off[s] + static_cast<int>(c.sectors[s].corners.size());
  UnionFind uf(off.back());
  auto corner_at = [&](const BranchEdge& t, int slot, int end) {
    const SlotRef& r = t.slots[slot];
    return off[r.sector] + side_end_corner(c.sectors[r.sector], r.side, end);
  };
  for (const BranchEdge& t : c.edges) {
    if (b.edges[oc.edge_map[t.id]].is_circle()) continue;
    for (int end = 0; end < 2; ++end)
      for (int slot = 1; slot < 3; ++slot) uf.unite(corner_at(t, 0, end), corner_at(t, slot, end));
  }
  std::map<int, int> vertex_of_root;
  for (const BranchVertex& v : b.vertices) {
    int r0 = uf.find(off[cs(v.corners.at(0).sector, 1)] + v.corners[0].corner);
    BranchVertex vs[2];
    for (int cls = 0; cls < 2; ++cls) vs[cls].id = 2 * v.id + cls;
    int r1 = -1;
    for (const VertexCorner& vc : v.corners)
      for (int eps : {1, -1}) {
        int r = uf.find(off[cs(vc.sector, eps)] + vc.corner);
        int cls = r == r0 ? 0 : 1;
        if (cls == 1) {
          if (r1 < 0) r1 = r;
          else if (r != r1) throw std::logic_error("vertex link splits into more than two sheets in the cover");
        }
        vs[cls].corners.push_back({cs(vc.sector, eps), vc.corner, vc.angle});
      }
    vertex_of_root[r0] = vs[0].id;
    if (r1 >= 0) vertex_of_root[r1] = vs[1].id;
    for (auto& x : vs) {
      c.vertices.push_back(std::move(x));
      oc.vertex_map.push_back(v.id);
    }
  }
  for (BranchEdge& t : c.edges) {
    if (b.edges[oc.edge_map[t.id]].is_circle()) continue;
    for (int end = 0; end < 2; ++end) t.endpoints.push_back(vertex_of_root.at(uf.find(corner_at(t, 0, end))));
  }
  c.orientation = std::vector<int>(c.sector_count(), 1);
  int nb = 0, nc = 0;
  sector_components(b, &nb);
  sector_components(c, &nc);
  oc.connected = nc == nb;
  return oc;
}

long long HorizontalBoundary::total_chi() const {
  long long s = 0;
  for (const auto& c : components) s += c.chi;
  return s;
}

bool HorizontalBoundary::is_offender(int c) const {
  const Component& k = components[c];
  return (k.chi == 1 && k.boundary_circles == 1) || (k.chi == 0 && k.boundary_circles == 2);
}

HorizontalBoundary horizontal_boundary_any(const BranchedSurface& b) {
  require_valid(b);
  HorizontalBoundary hb;
  std::vector<int> face_sector;
  for (int s = 0; s < b.sector_count(); ++s) {
    face_sector.push_back(s);
    face_sector.push_back(s);
  }
  // the face on the edge-top side of a slot's sheet stack
  auto edge_top = [](const SlotRef& r) { return 2 * r.sector + (r.flip ? 1 : 0); };
  auto edge_bottom = [](const SlotRef& r) { return 2 * r.sector + (r.flip ? 0 : 1); };
  for (const BranchEdge& e : b.edges) {
    hb.gluings.push_back({edge_top(e.lower()), e.lower().side, edge_top(e.top()), e.top().side});
    hb.gluings.push_back({edge_bottom(e.lower()), e.lower().side, edge_bottom(e.bottom()), e.bottom().side});
  }
  hb.surface = glue_faces(b, face_sector, hb.gluings);
  for (const auto& g : hb.surface.components) hb.components.push_back({g.chi, g.boundary_circles, g.orientable, g.faces});
  return hb;
}

HorizontalBoundary horizontal_boundary(const BranchedSurface& b) {
  require_valid(b);
  if (!transverse_orientation(b)) throw DomainError("horizontal boundary needs a transversely orientable complex; lift to the orientation double cover first");
  return horizontal_boundary_any(b);
}

LargeReport is_horizontally_large(const BranchedSurface& b) {
  LargeReport r;
  r.boundary = horizontal_boundary(b);
  for (int c = 0; c < static_cast<int>(r.boundary.components.size()); ++c)
    if (r.boundary.is_offender(c)) r.offenders.push_back(c);
  r.large = r.offenders.empty();
  return r;
}

long long complex_euler_characteristic(const BranchedSurface& b) {
  long long chi = static_cast<long long>(b.vertices.size());
  for (const BranchEdge& e : b.edges)
    if (!e.is_circle()) --chi;
  for (const Sector& s : b.sectors) chi += s.kind == SectorKind::Closed ? 2 - 2 * s.genus : 1;
  return chi;
}

std::vector<std::vector<long long>> multiply(const std::vector<std::vector<long long>>& a, const std::vector<std::vector<long long>>& b) {
  std::size_t cols = b.empty() ? 0 : b[0].size();
  std::vector<std::vector<long long>> out(a.size(), std::vector<long long>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Weights apply_matrix(const std::vector<std::vector<long long>>& m, const Weights& y) {
  Weights out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != y.size()) throw DomainError("matrix and weight vector sizes differ");
    for (std::size_t j = 0; j < y.size(); ++j) out[i] += m[i][j] * y[j];
  }
  return out;
}

const char* to_string(SplitChain::Outcome o) {
  switch (o) {
    case SplitChain::Outcome::Large: return "large";
    case SplitChain::Outcome::BudgetExhausted: return "budget-exhausted";
    case SplitChain::Outcome::Stuck: return "stuck";
  }
  return "?";
}

} // namespace bsurf
