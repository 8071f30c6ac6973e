#include "bsurf/complex.hpp"
#include "bsurf/union_find.hpp"

#include <map>
#include <sstream>

namespace bsurf {

const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::DanglingReference: return "dangling-reference";
    case ViolationKind::CornerAngle: return "corner-angle";
    case ViolationKind::LocalModel: return "local-model";
    case ViolationKind::Orientation: return "orientation";
    case ViolationKind::Structure: return "structure";
  }
  return "unknown";
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << to_string(violations[i].kind) << ": " << violations[i].detail;
  }
  return os.str();
}

namespace {

struct Checker {
  const BranchedSurface& b;
  ValidationReport report;

  void add(ViolationKind k, std::string s) { report.violations.push_back({k, std::move(s)}); }

  bool sector_ok(int s) const { return s >= 0 && s < b.sector_count(); }
  bool edge_ok(int e) const { return e >= 0 && e < b.edge_count(); }
  bool vertex_ok(int v) const { return v >= 0 && v < static_cast<int>(b.vertices.size()); }
  bool side_ok(int s, int m) const {
    return sector_ok(s) && m >= 0 && m < static_cast<int>(b.sectors[s].sides.size());
  }

  // Vertex at the start (end) of side m of sector s, or -1 on a circle or bad data.
  int side_vertex(int s, int m, bool at_start) const {
    const Side& sd = b.sectors[s].sides[m];
    if (!edge_ok(sd.edge)) return -1;
    const BranchEdge& e = b.edges[sd.edge];
    if (e.endpoints.size() != 2) return -1;
    bool first = (sd.dir > 0) == at_start;
    return e.endpoints[first ? 0 : 1];
  }

  void run();
  void check_ids();
  void check_sectors();
  void check_edges();
  void check_corners();
  void check_vertices();
  void check_orientation();

  // slot roles filled by check_edges: role of each sector side, -1 if none
  std::vector<std::vector<int>> role;
  std::vector<std::vector<int>> role_edge;
  bool slots_sound = true;
};

void Checker::check_ids() {
  for (int i = 0; i < b.sector_count(); ++i)
    if (b.sectors[i].id != i) add(ViolationKind::Structure, "sector at index " + std::to_string(i) + " has id " + std::to_string(b.sectors[i].id));
  for (int i = 0; i < b.edge_count(); ++i)
    if (b.edges[i].id != i) add(ViolationKind::Structure, "edge at index " + std::to_string(i) + " has id " + std::to_string(b.edges[i].id));
  for (int i = 0; i < static_cast<int>(b.vertices.size()); ++i)
    if (b.vertices[i].id != i) add(ViolationKind::Structure, "vertex at index " + std::to_string(i) + " has id " + std::to_string(b.vertices[i].id));
}

void Checker::check_sectors() {
  for (const Sector& s : b.sectors) {
    std::string name = "sector " + std::to_string(s.id);
    if (s.kind == SectorKind::Closed) {
      if (!s.sides.empty() || !s.corners.empty()) add(ViolationKind::Structure, name + ": closed sector with sides or corners");
      if (s.genus < 0) add(ViolationKind::Structure, name + ": negative genus");
      continue;
    }
    if (s.genus != 0) add(ViolationKind::Structure, name + ": disc sector with genus");
    if (s.sides.empty()) add(ViolationKind::Structure, name + ": disc sector without sides");
    if (s.corners.size() != s.sides.size()) add(ViolationKind::Structure, name + ": corner count differs from side count");
    for (std::size_t m = 0; m < s.sides.size(); ++m) {
      const Side& sd = s.sides[m];
      if (!edge_ok(sd.edge)) add(ViolationKind::DanglingReference, name + " side " + std::to_string(m) + ": edge " + std::to_string(sd.edge) + " does not exist");
      if (sd.dir != 1 && sd.dir != -1) add(ViolationKind::Structure, name + " side " + std::to_string(m) + ": dir must be +1 or -1");
    }
  }
}

void Checker::check_edges() {
  role.assign(b.sectors.size(), {});
  role_edge.assign(b.sectors.size(), {});
  for (const Sector& s : b.sectors) {
    role[s.id].assign(s.sides.size(), -1);
    role_edge[s.id].assign(s.sides.size(), -1);
  }
  static const char* slot_names[3] = {"upper[0]", "upper[1]", "lower"};
  for (const BranchEdge& e : b.edges) {
    std::string name = "edge " + std::to_string(e.id);
    for (int t = 0; t < 3; ++t) {
      const SlotRef& r = e.slots[t];
      std::string where = name + " " + slot_names[t];
      if (!sector_ok(r.sector)) {
        add(ViolationKind::DanglingReference, where + ": sector " + std::to_string(r.sector) + " does not exist");
        slots_sound = false;
        continue;
      }
      if (!side_ok(r.sector, r.side)) {
        add(ViolationKind::DanglingReference, where + ": sector " + std::to_string(r.sector) + " has no side " + std::to_string(r.side));
        slots_sound = false;
        continue;
      }
      if (b.sectors[r.sector].sides[r.side].edge != e.id) {
        add(ViolationKind::Structure, where + ": sector " + std::to_string(r.sector) + " side " + std::to_string(r.side) + " lies on another edge");
        slots_sound = false;
      }
      int& cur = role[r.sector][r.side];
      if (cur >= 0) {
        add(ViolationKind::Structure, where + ": sector " + std::to_string(r.sector) + " side " + std::to_string(r.side) + " fills two slots");
        slots_sound = false;
      }
      cur = t;
      role_edge[r.sector][r.side] = e.id;
    }
    if (!e.endpoints.empty() && e.endpoints.size() != 2) add(ViolationKind::Structure, name + ": endpoints must be empty or a pair");
    for (int v : e.endpoints)
      if (!vertex_ok(v)) add(ViolationKind::DanglingReference, name + ": vertex " + std::to_string(v) + " does not exist");
    if (e.length <= 0) add(ViolationKind::Structure, name + ": length must be positive");
  }
  for (const Sector& s : b.sectors)
    for (std::size_t m = 0; m < s.sides.size(); ++m)
      if (role[s.id][m] < 0 && edge_ok(s.sides[m].edge)) {
        add(ViolationKind::Structure, "sector " + std::to_string(s.id) + " side " + std::to_string(m) + " fills no slot of edge " + std::to_string(s.sides[m].edge));
        slots_sound = false;
      }
}

void Checker::check_corners() {
  for (const Sector& s : b.sectors) {
    if (s.kind != SectorKind::Disc || s.sides.empty() || s.corners.size() != s.sides.size()) continue;
    int n = static_cast<int>(s.sides.size());
    for (int m = 0; m < n; ++m) {
      int prev = (m + n - 1) % n;
      const Side& a = s.sides[prev];
      const Side& c = s.sides[m];
      if (!edge_ok(a.edge) || !edge_ok(c.edge)) continue;
      std::string name = "sector " + std::to_string(s.id) + " corner " + std::to_string(m);
      bool ca = b.edges[a.edge].is_circle(), cc = b.edges[c.edge].is_circle();
      if (ca || cc) {
        if (a.edge != c.edge) add(ViolationKind::Structure, name + ": a circle side meets another edge");
        else if (s.corners[m] != Angle::Straight) add(ViolationKind::CornerAngle, name + ": circle basepoint corner must be pi");
        continue;
      }
      int v1 = side_vertex(s.id, prev, false), v2 = side_vertex(s.id, m, true);
      if (v1 < 0 || v2 < 0) continue;
      if (v1 != v2) add(ViolationKind::Structure, name + ": adjacent sides end at different vertices");
    }
  }
}

void Checker::check_vertices() {
  // corner -> vertex claimed by the sides
  std::map<std::pair<int, int>, int> expected;
  for (const Sector& s : b.sectors) {
    if (s.kind != SectorKind::Disc || s.corners.size() != s.sides.size()) continue;
    for (int m = 0; m < static_cast<int>(s.sides.size()); ++m) {
      if (!edge_ok(s.sides[m].edge) || b.edges[s.sides[m].edge].is_circle()) continue;
      int v = side_vertex(s.id, m, true);
      if (v >= 0 && vertex_ok(v)) expected[{s.id, m}] = v;
    }
  }
  std::map<std::pair<int, int>, int> listed;
  for (const BranchVertex& v : b.vertices) {
    std::string name = "vertex " + std::to_string(v.id);
    if (v.corners.size() != 6) add(ViolationKind::LocalModel, name + ": " + std::to_string(v.corners.size()) + " incident corners, expected 6");
    int right = 0, straight = 0;
    bool refs_ok = true;
    for (const VertexCorner& c : v.corners) {
      (c.angle == Angle::Right ? right : straight)++;
      if (!sector_ok(c.sector) || c.corner < 0 || c.corner >= static_cast<int>(b.sectors[c.sector].corners.size())) {
        add(ViolationKind::DanglingReference, name + ": corner " + std::to_string(c.corner) + " of sector " + std::to_string(c.sector) + " does not exist");
        refs_ok = false;
        continue;
      }
      if (b.sectors[c.sector].corners[c.corner] != c.angle)
        add(ViolationKind::CornerAngle, name + ": sector " + std::to_string(c.sector) + " corner " + std::to_string(c.corner) + " angle disagrees with the sector");
      auto key = std::make_pair(c.sector, c.corner);
      if (listed.count(key)) add(ViolationKind::Structure, name + ": sector " + std::to_string(c.sector) + " corner " + std::to_string(c.corner) + " listed twice");
      listed[key] = v.id;
      auto it = expected.find(key);
      if (it == expected.end() || it->second != v.id)
        add(ViolationKind::Structure, name + ": sector " + std::to_string(c.sector) + " corner " + std::to_string(c.corner) + " does not sit at this vertex");
    }
    if (v.corners.size() == 6 && (right != 4 || straight != 2))
      add(ViolationKind::LocalModel, name + ": angles must be four pi/2 and two pi");
    int ends = 0;
    for (const BranchEdge& e : b.edges)
      if (e.endpoints.size() == 2) ends += (e.endpoints[0] == v.id) + (e.endpoints[1] == v.id);
    if (ends != 4) add(ViolationKind::LocalModel, name + ": " + std::to_string(ends) + " edge ends, expected 4");
    // slot pattern of the generic crossing: both pi corners join two upper slots; of the
    // pi/2 corners one joins two lowers, one joins two uppers, two join a lower and an upper
    if (refs_ok && slots_sound && v.corners.size() == 6 && right == 4) {
      int ll = 0, uu = 0, lu = 0;
      bool pattern = true;
      for (const VertexCorner& c : v.corners) {
        const Sector& s = b.sectors[c.sector];
        int n = static_cast<int>(s.sides.size());
        int ra = role[c.sector][(c.corner + n - 1) % n], rc = role[c.sector][c.corner];
        if (ra < 0 || rc < 0) {
          pattern = false;
          break;
        }
        int lowers = (ra == Lower) + (rc == Lower);
        if (c.angle == Angle::Straight) {
          if (lowers != 0) pattern = false;
        } else {
          (lowers == 2 ? ll : lowers == 1 ? lu : uu)++;
        }
      }
      if (!pattern || ll != 1 || uu != 1 || lu != 2)
        add(ViolationKind::LocalModel, name + ": slot pattern of the corners is not the generic crossing");
    }
  }
  for (const auto& [key, v] : expected)
    if (!listed.count(key))
      add(ViolationKind::Structure, "sector " + std::to_string(key.first) + " corner " + std::to_string(key.second) + " missing from vertex " + std::to_string(v));
}

void Checker::check_orientation() {
  if (!b.orientation) return;
  const auto& o = *b.orientation;
  if (static_cast<int>(o.size()) != b.sector_count()) {
    add(ViolationKind::Structure, "orientation: one sign per sector required");
    return;
  }
  for (int x : o)
    if (x != 1 && x != -1) {
      add(ViolationKind::Structure, "orientation: signs must be +1 or -1");
      return;
    }
  if (!slots_sound) return;
  for (const BranchEdge& e : b.edges) {
    int ref = 0;
    bool ok = true;
    for (int t = 0; t < 3; ++t) {
      const SlotRef& r = e.slots[t];
      int sgn = o[r.sector] * (r.flip ? -1 : 1);
      if (t == 0) ref = sgn;
      else if (sgn != ref) ok = false;
    }
    if (!ok) add(ViolationKind::Orientation, "edge " + std::to_string(e.id) + ": sides not co-oriented");
  }
}

void Checker::run() {
  check_ids();
  check_sectors();
  check_edges();
  check_corners();
  check_vertices();
  check_orientation();
}

} // namespace

ValidationReport validate(const BranchedSurface& b) {
  Checker c{b, {}, {}, {}};
  c.run();
  return std::move(c.report);
}

void require_valid(const BranchedSurface& b) {
  ValidationReport r = validate(b);
  if (!r.ok()) throw InvalidComplex(std::move(r));
}

std::vector<std::vector<SideSlot>> side_slots(const BranchedSurface& b) {
  std::vector<std::vector<SideSlot>> out(b.sectors.size());
  for (const Sector& s : b.sectors) out[s.id].assign(s.sides.size(), {});
  for (const BranchEdge& e : b.edges)
    for (int t = 0; t < 3; ++t) out[e.slots[t].sector][e.slots[t].side] = {e.id, t};
  return out;
}

bool orientation_consistent(const BranchedSurface& b, const std::vector<int>& signs) {
  if (static_cast<int>(signs.size()) != b.sector_count()) return false;
  for (const BranchEdge& e : b.edges) {
    int ref = signs[e.slots[0].sector] * (e.slots[0].flip ? -1 : 1);
    for (int t = 1; t < 3; ++t)
      if (signs[e.slots[t].sector] * (e.slots[t].flip ? -1 : 1) != ref) return false;
  }
  return true;
}

std::optional<std::vector<int>> transverse_orientation(const BranchedSurface& b) {
  if (b.orientation && orientation_consistent(b, *b.orientation)) return b.orientation;
  UnionFind uf(b.sector_count());
  for (const BranchEdge& e : b.edges)
    for (int t = 1; t < 3; ++t)
      if (!uf.unite(e.slots[0].sector, e.slots[t].sector, e.slots[0].flip != e.slots[t].flip)) return std::nullopt;
  std::vector<int> out(b.sector_count());
  for (int s = 0; s < b.sector_count(); ++s) {
    int par = 0;
    uf.find(s, par);
    out[s] = par ? -1 : 1;
  }
  // root sign is +1; make the lowest sector of each component positive
  std::vector<int> comp = sector_components(b);
  std::vector<int> first_sign(b.sector_count(), 0);
  for (int s = 0; s < b.sector_count(); ++s)
    if (!first_sign[comp[s]]) first_sign[comp[s]] = out[s];
  for (int s = 0; s < b.sector_count(); ++s) out[s] *= first_sign[comp[s]];
  return out;
}

std::vector<int> sector_components(const BranchedSurface& b, int* count) {
  UnionFind uf(b.sector_count());
  for (const BranchEdge& e : b.edges) {
    uf.unite(e.slots[0].sector, e.slots[1].sector);
    uf.unite(e.slots[0].sector, e.slots[2].sector);
  }
  return uf.labels(count);
}

Cellulation build_cellulation(const BranchedSurface& b) {
  require_valid(b);
  Cellulation c;
  c.vertex_count = static_cast<int>(b.vertices.size());
  c.edge_count = b.edge_count();
  c.face_count = b.sector_count();
  c.vertex_ends.resize(b.vertices.size());
  for (const BranchEdge& e : b.edges) {
    if (e.is_circle()) ++c.circle_count;
    c.edge_endpoints.push_back(e.endpoints);
    for (int end = 0; end < static_cast<int>(e.endpoints.size()); ++end) c.vertex_ends[e.endpoints[end]].push_back({e.id, end});
  }
  for (const Sector& s : b.sectors) {
    if (s.kind == SectorKind::Closed) ++c.closed_face_count;
    std::vector<std::pair<int, int>> bd;
    for (const Side& sd : s.sides) bd.push_back({sd.edge, sd.dir});
    c.face_boundary.push_back(std::move(bd));
  }
  return c;
}

} // namespace bsurf
