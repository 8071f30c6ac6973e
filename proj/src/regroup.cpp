#include "bsurf/io.hpp"
#include "bsurf/topo.hpp"
#include "bsurf/union_find.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <map>

namespace bsurf {

namespace {

[[noreturn]] void fail(const std::string& what) { throw DomainError("cannot regroup sheets: " + what); }

struct Piece {
  int edge = 0;
  std::array<int, 3> group{};
  std::array<int, 3> side{};
  std::array<bool, 3> flip{};
};

struct Chain {
  std::vector<std::pair<int, bool>> pieces;  // piece, traversed from end 0 to end 1
  std::vector<int> tau;                      // 1 when the piece frame is opposite to the chain frame
  bool closed = false;
  int start = -1, finish = -1;               // point classes
};

std::string range(long long lo, long long hi) { return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]"; }

} // namespace

Regrouping regroup(const BranchedSurface& b, const Weights& w, const std::vector<std::set<long long>>& cuts) {
  require_valid(b);
  require_solution(b, w);
  const int n = b.sector_count();
  Regrouping out;
  auto& groups = out.groups;
  std::vector<std::vector<int>> sector_groups(n);
  for (int s = 0; s < n; ++s) {
    if (w[s] == 0) continue;
    out.kept_sectors.push_back(s);
    long long lo = 1;
    if (s < static_cast<int>(cuts.size()))
      for (long long g : cuts[s]) {
        if (g <= 0 || g >= w[s]) continue;
        sector_groups[s].push_back(static_cast<int>(groups.size()));
        groups.push_back({s, lo, g, 0, 0});
        lo = g + 1;
      }
    sector_groups[s].push_back(static_cast<int>(groups.size()));
    groups.push_back({s, lo, w[s], 0, 0});
  }
  const int ng = static_cast<int>(groups.size());
  std::vector<int> face_sector(ng);
  for (int g = 0; g < ng; ++g) face_sector[g] = groups[g].sector;

  std::vector<SideGluing> joins;
  std::vector<Piece> pieces;
  std::map<std::pair<int, int>, std::pair<int, int>> owner;  // free (face, side) -> (piece, slot)
  UnionFind frame(ng);
  for (const BranchEdge& e : b.edges) {
    const SlotRef &si = e.top(), &sj = e.bottom(), &sk = e.lower();
    long long wi = w[si.sector], wk = w[sk.sector];
    if (wk == 0) continue;
    struct Iv {
      long long a, z;
      int group, slot;
    };
    auto interval = [&](int g, const SlotRef& r, long long shift, int slot) {
      long long ws = w[r.sector], lo = groups[g].lo, hi = groups[g].hi;
      if (r.flip) std::tie(lo, hi) = std::pair(ws + 1 - hi, ws + 1 - lo);
      return Iv{lo + shift, hi + shift, g, slot};
    };
    std::vector<Iv> lower, upper;
    for (int g : sector_groups[sk.sector]) lower.push_back(interval(g, sk, 0, Lower));
    for (int g : sector_groups[si.sector]) upper.push_back(interval(g, si, 0, Top));
    for (int g : sector_groups[sj.sector]) upper.push_back(interval(g, sj, wi, Bottom));
    std::sort(lower.begin(), lower.end(), [](const Iv& x, const Iv& y) { return x.a < y.a; });
    std::sort(upper.begin(), upper.end(), [](const Iv& x, const Iv& y) { return x.a < y.a; });
    std::vector<std::vector<Iv>> inside(lower.size());
    for (const Iv& u : upper) {
      auto it = std::find_if(lower.begin(), lower.end(), [&](const Iv& l) { return l.a <= u.a && u.a <= l.z; });
      if (it == lower.end() || u.z > it->z) fail("edge " + std::to_string(e.id) + ": an upper sheet group straddles two lower groups");
      inside[it - lower.begin()].push_back(u);
    }
    for (std::size_t li = 0; li < lower.size(); ++li) {
      const Iv& l = lower[li];
      const auto& us = inside[li];
      const Regrouping::Group& lg = groups[l.group];
      if (us.size() == 1) {
        const SlotRef& ur = e.slots[us[0].slot];
        const Regrouping::Group& ug = groups[us[0].group];
        joins.push_back({l.group, sk.side, us[0].group, ur.side});
        if (!frame.unite(l.group, us[0].group, (sk.flip != ur.flip) ? 1 : 0)) fail("a merged sector is one-sided (its fiber frame reverses along a loop)");
        out.log.push_back("edge " + std::to_string(e.id) + ": sector " + std::to_string(lg.sector) + " " + range(lg.lo, lg.hi) + " merges with sector " +
                          std::to_string(ug.sector) + " " + range(ug.lo, ug.hi));
      } else if (us.size() == 2) {
        Piece p;
        p.edge = e.id;
        for (int t = 0; t < 2; ++t) {
          const SlotRef& ur = e.slots[us[t].slot];
          p.group[t] = us[t].group;
          p.side[t] = ur.side;
          p.flip[t] = ur.flip;
        }
        p.group[Lower] = l.group;
        p.side[Lower] = sk.side;
        p.flip[Lower] = sk.flip;
        int id = static_cast<int>(pieces.size());
        for (int t = 0; t < 3; ++t) owner[{p.group[t], p.side[t]}] = {id, t};
        pieces.push_back(p);
      } else {
        fail("edge " + std::to_string(e.id) + ": a lower sheet group meets " + std::to_string(us.size()) + " upper groups");
      }
    }
  }

  GluedSurface surf = glue_faces(b, face_sector, joins);
  const int nr = static_cast<int>(surf.components.size());
  std::vector<int> frame_par(ng);
  for (int g = 0; g < ng; ++g) frame.find(g, frame_par[g]);
  for (int g = 0; g < ng; ++g) {
    groups[g].region = surf.face_component[g];
    groups[g].frame = frame_par[g] ^ frame_par[surf.components[groups[g].region].faces.front()];
  }
  auto new_flip = [&](const Piece& p, int t) { return (p.flip[t] ? 1 : 0) ^ groups[p.group[t]].frame; };

  // points of the new branch locus
  UnionFind bp(surf.point_count);
  const int np = static_cast<int>(pieces.size());
  std::vector<std::array<std::array<int, 3>, 2>> pt(np);
  for (int p = 0; p < np; ++p)
    for (int end = 0; end < 2; ++end) {
      for (int t = 0; t < 3; ++t) {
        const Piece& pc = pieces[p];
        pt[p][end][t] = surf.point_of(pc.group[t], side_end_corner(b.sectors[face_sector[pc.group[t]]], pc.side[t], end));
      }
      bp.unite(pt[p][end][0], pt[p][end][1]);
      bp.unite(pt[p][end][0], pt[p][end][2]);
    }
  auto root = [&](int p, int end) { return bp.find(pt[p][end][Lower]); };
  std::map<int, std::vector<std::pair<int, int>>> ends_at;
  for (int p = 0; p < np; ++p)
    for (int end = 0; end < 2; ++end) ends_at[root(p, end)].push_back({p, end});
  std::map<int, std::vector<int>> corners_at;
  for (int x = 0; x < surf.point_count; ++x)
    if (surf.point_on_boundary[x]) corners_at[bp.find(x)].push_back(surf.point_quarters[x]);
  std::map<int, bool> is_vertex;
  for (const auto& [r, qs] : corners_at) {
    auto it = ends_at.find(r);
    std::size_t k = it == ends_at.end() ? 0 : it->second.size();
    long long right = std::count(qs.begin(), qs.end(), 1), straight = std::count(qs.begin(), qs.end(), 2);
    if (k == 4) {
      if (qs.size() != 6 || right != 4 || straight != 2) fail("a crossing of the new branch locus is not generic");
      is_vertex[r] = true;
    } else if (k == 2) {
      // a branch curve may turn at an old crossing; it is smoothed there
      if (qs.size() != 3) fail("a smooth point of the new branch locus does not meet three sheets");
      is_vertex[r] = false;
    } else {
      fail("a point of the new branch locus meets " + std::to_string(k) + " branch ends");
    }
  }

  std::vector<Chain> chains;
  std::vector<std::pair<int, int>> piece_chain(np, {-1, -1});
  auto check_step = [&](const Piece& a, int ta, const Piece& c, int tc) {
    for (int t = 0; t < 3; ++t) {
      int sa = t == Lower ? t : t ^ ta, sc = t == Lower ? t : t ^ tc;
      if (groups[a.group[sa]].region != groups[c.group[sc]].region || (new_flip(a, sa) ^ ta) != (new_flip(c, sc) ^ tc))
        fail("the new branch locus does not continue smoothly");
    }
  };
  auto walk = [&](int p0, int e0) {
    Chain ch;
    ch.start = root(p0, e0);
    int cur = p0, ein = e0, tau = 0;
    while (true) {
      piece_chain[cur] = {static_cast<int>(chains.size()), static_cast<int>(ch.pieces.size())};
      ch.pieces.push_back({cur, ein == 0});
      ch.tau.push_back(tau);
      int eout = 1 - ein, q = root(cur, eout);
      if (is_vertex.at(q)) {
        ch.finish = q;
        break;
      }
      const auto& pr = ends_at.at(q);
      auto other = pr[0] == std::pair{cur, eout} ? pr[1] : pr[0];
      int next_tau = tau ^ new_flip(pieces[cur], Lower) ^ new_flip(pieces[other.first], Lower);
      check_step(pieces[cur], tau, pieces[other.first], next_tau);
      if (other == std::pair{p0, e0}) {
        if (next_tau != 0) fail("a closed branch curve reverses the fiber frame");
        ch.closed = true;
        ch.finish = q;
        break;
      }
      cur = other.first;
      ein = other.second;
      tau = next_tau;
    }
    chains.push_back(std::move(ch));
  };
  for (int p = 0; p < np; ++p)
    for (int end = 0; end < 2 && piece_chain[p].first < 0; ++end)
      if (is_vertex.at(root(p, end))) walk(p, end);
  for (int p = 0; p < np; ++p)
    if (piece_chain[p].first < 0) walk(p, 0);
  std::map<int, bool> kept;
  for (const auto& [r, v] : is_vertex)
    if (v) kept[r] = true;
  for (const Chain& c : chains)
    if (c.closed) kept[c.start] = true;

  BranchedSurface& nb = out.complex;
  nb.name = b.name;
  nb.edges.resize(chains.size());
  std::vector<std::array<bool, 3>> filled(chains.size(), {false, false, false});
  for (int r = 0; r < nr; ++r) {
    const auto& comp = surf.components[r];
    Sector s;
    s.id = r;
    if (comp.free_sides == 0) {
      if (!comp.orientable) fail("merged sector " + std::to_string(r) + " is a closed non-orientable surface");
      if (comp.chi > 2 || comp.chi % 2 != 0) fail("merged sector " + std::to_string(r) + " has odd Euler characteristic");
      s.kind = SectorKind::Closed;
      s.genus = static_cast<int>((2 - comp.chi) / 2);
      nb.sectors.push_back(std::move(s));
      continue;
    }
    if (!comp.orientable || comp.chi != 1 || comp.boundary_circles != 1)
      fail("merged sector " + std::to_string(r) + " is not a disc (chi " + std::to_string(comp.chi) + ", " + std::to_string(comp.boundary_circles) + " boundary circles)");
    struct Entry {
      int face, side, from, to, dir;
    };
    std::vector<Entry> entries;
    std::map<int, int> by_start;
    for (int f : comp.faces) {
      const Sector& bs = b.sectors[face_sector[f]];
      int ns = static_cast<int>(bs.sides.size());
      int q = surf.face_parity[f];
      for (int m = 0; m < ns; ++m) {
        if (!surf.is_free(f, m)) continue;
        int a = surf.point_of(f, m), z = surf.point_of(f, (m + 1) % ns);
        Entry en{f, m, q ? z : a, q ? a : z, bs.sides[m].dir * (q ? -1 : 1)};
        if (!by_start.emplace(en.from, static_cast<int>(entries.size())).second) fail("merged sector " + std::to_string(r) + " is pinched");
        entries.push_back(en);
      }
    }
    int first = -1;
    for (int i = 0; i < static_cast<int>(entries.size()); ++i)
      if (kept.count(bp.find(entries[i].from)) && (first < 0 || std::pair(entries[i].face, entries[i].side) < std::pair(entries[first].face, entries[first].side)))
        first = i;
    if (first < 0) fail("merged sector " + std::to_string(r) + " has no corner on its boundary");
    std::vector<int> order;
    for (int i = first;;) {
      order.push_back(i);
      auto it = by_start.find(entries[i].to);
      if (it == by_start.end()) fail("boundary of merged sector " + std::to_string(r) + " does not close up");
      i = it->second;
      if (i == first) break;
      if (order.size() > entries.size()) fail("boundary of merged sector " + std::to_string(r) + " does not close up");
    }
    if (order.size() != entries.size()) fail("merged sector " + std::to_string(r) + " has more than one boundary curve");
    for (std::size_t k = 0; k < order.size();) {
      std::size_t len = 1;
      while (k + len < order.size() && !kept.count(bp.find(entries[order[k + len]].from))) ++len;
      const Entry& en = entries[order[k]];
      auto [p, slot] = owner.at({en.face, en.side});
      auto [c, idx] = piece_chain[p];
      const Chain& ch = chains[c];
      if (len != ch.pieces.size()) fail("a side of merged sector " + std::to_string(r) + " does not match a branch curve");
      for (std::size_t x = 0; x < len; ++x)
        if (piece_chain[owner.at({entries[order[k + x]].face, entries[order[k + x]].side}).first].first != c)
          fail("a side of merged sector " + std::to_string(r) + " runs along two branch curves");
      int tau = ch.tau[idx];
      int cslot = slot == Lower ? Lower : slot ^ tau;
      int side_id = static_cast<int>(s.sides.size());
      if (filled[c][cslot]) fail("a branch curve slot is filled twice");
      filled[c][cslot] = true;
      nb.edges[c].slots[cslot] = SlotRef{r, side_id, (new_flip(pieces[p], slot) ^ tau) != 0};
      s.sides.push_back(Side{c, en.dir * (ch.pieces[idx].second ? 1 : -1)});
      int qa = is_vertex.at(bp.find(en.from)) ? surf.point_quarters[en.from] : 2;
      if (qa != 1 && qa != 2) fail("merged sector " + std::to_string(r) + " has a corner of angle other than pi/2 or pi");
      s.corners.push_back(qa == 1 ? Angle::Right : Angle::Straight);
      k += len;
    }
    nb.sectors.push_back(std::move(s));
  }
  std::map<int, int> vertex_id;
  for (const Chain& c : chains)
    if (!c.closed)
      for (int x : {c.start, c.finish})
        if (!vertex_id.count(x)) {
          int id = static_cast<int>(vertex_id.size());
          vertex_id[x] = id;
        }
  nb.vertices.resize(vertex_id.size());
  for (std::size_t v = 0; v < nb.vertices.size(); ++v) nb.vertices[v].id = static_cast<int>(v);
  for (std::size_t c = 0; c < chains.size(); ++c) {
    nb.edges[c].id = static_cast<int>(c);
    if (!chains[c].closed) nb.edges[c].endpoints = {vertex_id.at(chains[c].start), vertex_id.at(chains[c].finish)};
    if (!(filled[c][0] && filled[c][1] && filled[c][2])) fail("a branch curve has an empty slot");
  }
  // corners at vertices: start point of each side
  for (int r = 0; r < nr; ++r) {
    const Sector& s = nb.sectors[r];
    for (int m = 0; m < static_cast<int>(s.sides.size()); ++m) {
      const BranchEdge& e = nb.edges[s.sides[m].edge];
      if (e.is_circle()) continue;
      int end = s.sides[m].dir > 0 ? 0 : 1;
      nb.vertices[e.endpoints[end]].corners.push_back({r, m, s.corners[m]});
    }
  }
  for (auto& v : nb.vertices)
    std::sort(v.corners.begin(), v.corners.end(), [](const VertexCorner& x, const VertexCorner& y) { return std::pair(x.sector, x.corner) < std::pair(y.sector, y.corner); });

  out.weights.assign(nr, 0);
  out.matrix.assign(n, std::vector<long long>(nr, 0));
  for (const Regrouping::Group& g : groups) {
    long long size = g.hi - g.lo + 1;
    if (out.weights[g.region] != 0 && out.weights[g.region] != size) fail("merged sheet groups have different sizes");
    out.weights[g.region] = size;
    out.matrix[g.sector][g.region] += 1;
  }
  ValidationReport rep = validate(nb);
  if (!rep.ok()) throw DomainError("regrouping produced an invalid complex: " + rep.summary());
  return out;
}

Regrouping support_subbranched(const BranchedSurface& b, const Weights& w) {
  require_solution(b, w);
  if (std::all_of(w.begin(), w.end(), [](long long x) { return x == 0; })) throw DomainError("weight vector is zero");
  return regroup(b, w, {});
}

SplitMove edge_split(const BranchedSurface& b, const Weights& w, int edge, long long to_top, long long to_bottom) {
  require_valid(b);
  require_solution(b, w);
  if (edge < 0 || edge >= b.edge_count()) throw DomainError("no edge " + std::to_string(edge));
  const BranchEdge& e = b.edges[edge];
  long long wi = w[e.top().sector], wj = w[e.bottom().sector];
  if (to_top < 0 || to_bottom < 0 || to_top != wi || to_bottom != wj)
    throw DomainError("inconsistent pass datum (" + std::to_string(to_top) + "," + std::to_string(to_bottom) + ") at edge " + std::to_string(edge) +
                      ": the weights send " + std::to_string(wi) + " sheets up and " + std::to_string(wj) + " down");
  SplitMove mv;
  mv.edge = edge;
  mv.to_top = to_top;
  mv.to_bottom = to_bottom;
  mv.cuts.resize(b.sector_count());
  mv.degenerate = to_top == 0 || to_bottom == 0;
  if (!mv.degenerate) {
    auto slots = side_slots(b);
    std::vector<std::pair<int, long long>> work;
    auto add = [&](int s, long long g) {
      if (g > 0 && g < w[s] && mv.cuts[s].insert(g).second) work.push_back({s, g});
    };
    const SlotRef& k = e.lower();
    add(k.sector, k.flip ? w[k.sector] - wi : wi);
    while (!work.empty()) {
      auto [s, g] = work.back();
      work.pop_back();
      for (const SideSlot& ss : slots[s]) {
        const BranchEdge& f = b.edges[ss.edge];
        const SlotRef& me = f.slots[ss.slot];
        long long ge = me.flip ? w[s] - g : g;
        long long fi = w[f.top().sector], fk = w[f.lower().sector];
        auto to_frame = [&](const SlotRef& r, long long gap) { return r.flip ? w[r.sector] - gap : gap; };
        if (ss.slot == Lower) {
          if (ge == fi) continue;  // the cut runs into the cusp
          if (ge < fi) add(f.top().sector, to_frame(f.top(), ge));
          else add(f.bottom().sector, to_frame(f.bottom(), ge - fi));
        } else {
          long long lg = ss.slot == Top ? ge : fi + ge;
          if (lg > 0 && lg < fk) add(f.lower().sector, to_frame(f.lower(), lg));
        }
      }
    }
  }
  mv.result = regroup(b, w, mv.cuts);
  // every horizontal boundary component of B' should contain part of the old one
  HorizontalBoundary hb = horizontal_boundary_any(mv.result.complex);
  std::vector<std::array<bool, 2>> old(mv.result.weights.size(), {false, false});
  for (const auto& g : mv.result.groups) {
    bool top = g.lo == 1, bottom = g.hi == w[g.sector];
    if (g.frame) std::swap(top, bottom);
    old[g.region][0] = old[g.region][0] || top;
    old[g.region][1] = old[g.region][1] || bottom;
  }
  for (int c = 0; c < static_cast<int>(hb.components.size()); ++c) {
    bool reached = false;
    for (int f : hb.components[c].faces) reached = reached || old[f / 2][f % 2];
    if (!reached) mv.new_components.push_back(c);
  }
  mv.regular = mv.new_components.empty();
  return mv;
}

SplitChain split_until_large(const BranchedSurface& b, const Weights& w, int step_budget) {
  require_valid(b);
  require_solution(b, w);
  if (!fully_carries(w)) throw DomainError("splitting needs a fully carried solution");
  SplitChain ch;
  ch.final_complex = b;
  ch.final_weights = w;
  int n = b.sector_count();
  ch.matrix.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) ch.matrix[i][i] = 1;
  while (true) {
    HorizontalBoundary hb = horizontal_boundary_any(ch.final_complex);
    std::vector<int> offenders;
    for (int c = 0; c < static_cast<int>(hb.components.size()); ++c)
      if (hb.is_offender(c)) offenders.push_back(c);
    if (offenders.empty()) {
      ch.outcome = SplitChain::Outcome::Large;
      return ch;
    }
    if (static_cast<int>(ch.steps.size()) >= step_budget) {
      ch.outcome = SplitChain::Outcome::BudgetExhausted;
      return ch;
    }
    std::stable_sort(offenders.begin(), offenders.end(), [&](int x, int y) { return hb.components[x].faces.size() > hb.components[y].faces.size(); });
    const BranchedSurface& cur = ch.final_complex;
    std::string before = canonical_text(complex_to_json(cur));
    bool moved = false;
    for (int c : offenders) {
      std::set<int> edges;
      for (int f : hb.components[c].faces) {
        const Sector& s = cur.sectors[f / 2];
        for (int m = 0; m < static_cast<int>(s.sides.size()); ++m)
          if (hb.surface.is_free(f, m)) edges.insert(s.sides[m].edge);
      }
      for (int e : edges) {
        const BranchEdge& be = cur.edges[e];
        SplitMove mv;
        try {
          mv = edge_split(cur, ch.final_weights, e, ch.final_weights[be.top().sector], ch.final_weights[be.bottom().sector]);
        } catch (const DomainError&) {
          continue;
        }
        if (!mv.regular || canonical_text(complex_to_json(mv.result.complex)) == before) continue;
        ch.matrix = multiply(ch.matrix, mv.result.matrix);
        ch.final_weights = mv.result.weights;
        ch.final_complex = mv.result.complex;
        ch.steps.push_back(std::move(mv));
        moved = true;
        break;
      }
      if (moved) break;
    }
    if (!moved) {
      ch.outcome = SplitChain::Outcome::Stuck;
      return ch;
    }
  }
}

} // namespace bsurf
