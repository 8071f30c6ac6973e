#include "bsurf/growth.hpp"
#include "bsurf/topo.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace bsurf {

ChainComplex cell_chain_complex(const BranchedSurface& b) {
  require_valid(b);
  ChainComplex cc;
  int nv = static_cast<int>(b.vertices.size());
  std::vector<int> circle_base(b.edge_count(), -1), closed_base(b.sector_count(), -1);
  for (const BranchEdge& e : b.edges)
    if (e.is_circle()) circle_base[e.id] = nv++;
  for (const Sector& s : b.sectors)
    if (s.kind == SectorKind::Closed) closed_base[s.id] = nv++;
  for (const BranchEdge& e : b.edges) cc.one_cells.push_back("e" + std::to_string(e.id));
  for (const Sector& s : b.sectors)
    for (int k = 0; s.kind == SectorKind::Closed && k < s.genus; ++k) {
      cc.one_cells.push_back("s" + std::to_string(s.id) + ".a" + std::to_string(k));
      cc.one_cells.push_back("s" + std::to_string(s.id) + ".b" + std::to_string(k));
    }
  int ne = static_cast<int>(cc.one_cells.size()), nf = b.sector_count();
  cc.cells[0] = nv;
  cc.cells[1] = ne;
  cc.cells[2] = nf;
  cc.d1.assign(nv, std::vector<Integer>(ne, 0));
  cc.d2.assign(ne, std::vector<Integer>(nf, 0));
  for (const BranchEdge& e : b.edges)
    if (!e.is_circle()) {
      cc.d1[e.endpoints[1]][e.id] += 1;
      cc.d1[e.endpoints[0]][e.id] -= 1;
    }
  // a closed sector's face is attached along a product of commutators: zero boundary
  for (const Sector& s : b.sectors)
    for (const Side& sd : s.sides) cc.d2[sd.edge][s.id] += sd.dir;
  return cc;
}

std::vector<DualCrossing> dual_crossings(const BranchedSurface& b) {
  std::vector<DualCrossing> out;
  for (const BranchEdge& e : b.edges)
    for (int t : {Top, Bottom}) out.push_back({e.id, e.lower().sector, e.lower().side, e.slots[t].sector, e.slots[t].side});
  return out;
}

namespace {

ZMatrix transpose(const ZMatrix& m, int cols) {
  ZMatrix t(cols, std::vector<Integer>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

// Value of a 1-cochain on the path from the anchor (corner 0) of the first sector, along
// its boundary to the crossing, across the edge, and back to the anchor of the second.
Integer crossing_value(const BranchedSurface& b, const std::vector<Integer>& phi, const DualCrossing& x) {
  auto walk = [&](int s, int m) {
    Integer v = 0;
    for (int t = 0; t < m; ++t) v += b.sectors[s].sides[t].dir * phi[b.sectors[s].sides[t].edge];
    return v;
  };
  Integer v = walk(x.from_sector, x.from_side) - walk(x.to_sector, x.to_side);
  const BranchEdge& e = b.edges[x.edge];
  if (!e.is_circle()) {
    int a = b.sectors[x.from_sector].sides[x.from_side].dir > 0 ? 0 : 1;
    int z = b.sectors[x.to_sector].sides[x.to_side].dir > 0 ? 0 : 1;
    if (a != z) v += a == 0 ? phi[e.id] : -phi[e.id];
  }
  return v;
}

} // namespace

HomologyData homology_rank_b(const BranchedSurface& b) {
  HomologyData h;
  h.complex = cell_chain_complex(b);
  const ChainComplex& cc = h.complex;
  int r1 = rank(cc.d1, cc.cells[1]);
  std::vector<Integer> inv = smith_invariants(cc.d2);
  int r2 = static_cast<int>(inv.size());
  for (const Integer& d : inv)
    if (d > 1) h.torsion.push_back(d);
  h.b = cc.cells[1] - r1 - r2;
  // cocycles: kernel of d2^T, completed against the coboundaries
  RowEchelon k = rref(to_rational(transpose(cc.d2, cc.cells[2])), cc.cells[1]);
  ZMatrix span = cc.d1;
  int have = r1;
  for (const auto& v : nullspace(k)) {
    if (static_cast<int>(h.cocycles.size()) == h.b) break;
    std::vector<Integer> z = clear_denominators(v);
    make_primitive(z);
    span.push_back(z);
    int r = rank(span, cc.cells[1]);
    if (r > have) {
      have = r;
      h.cocycles.push_back(z);
    } else {
      span.pop_back();
    }
  }
  auto crossings = dual_crossings(b);
  for (const auto& phi : h.cocycles) {
    std::vector<Integer> vals;
    for (const auto& x : crossings) vals.push_back(crossing_value(b, phi, x));
    h.crossing_values.push_back(std::move(vals));
  }
  return h;
}

Rational intersection_constant_c(const HomologyData& h) {
  Integer m = 0;
  for (const auto& v : h.cocycles)
    for (const auto& x : v) m = std::max(m, Integer(abs(x)));
  for (const auto& v : h.crossing_values)
    for (const auto& x : v) m = std::max(m, Integer(abs(x)));
  if (h.b == 0 || m == 0) return 1;
  return Rational(Integer(1), m);
}

Rational count_bound_h(const Rational& n, int b, const Rational& c) {
  if (n <= 0) throw DomainError("count bound needs n > 0");
  if (c <= 0) throw DomainError("count bound needs c > 0");
  return pow(2 * n / c, static_cast<unsigned>(b));
}

Rational GrowthPolynomial::operator()(const Rational& r) const {
  Rational v = 0, p = 1;
  for (const auto& a : coefficients) {
    v += a * p;
    p *= r;
  }
  return v;
}

namespace {

std::string plain(const Rational& q) {
  return denominator_of(q) == 1 ? format_integer(numerator_of(q)) : format_rational(q);
}

} // namespace

std::string GrowthPolynomial::formula() const {
  return "p(r) = " + std::to_string(s) + " * " + plain(a_max) + " * (2*(2r + 1 + " + plain(d_max) + ")/" + (denominator_of(c) == 1 ? plain(c) : "(" + plain(c) + ")") + ")^" + std::to_string(b);
}

GrowthPolynomial growth_polynomial(const BranchedSurface& b0) {
  require_valid(b0);
  GrowthPolynomial g;
  BranchedSurface lifted;
  const BranchedSurface* b = &b0;
  if (!transverse_orientation(b0)) {
    lifted = orientation_double_cover(b0).cover;
    b = &lifted;
    g.lifted = true;
  }
  HomologyData h = homology_rank_b(*b);
  g.b = h.b;
  g.c = intersection_constant_c(h);
  g.s = b->sector_count();
  g.a_max = 0;
  g.d_max = 0;
  for (const Sector& s : b->sectors) {
    g.a_max = std::max(g.a_max, s.geometry.area.value_or(Rational(1)));
    Rational d = 0;
    if (s.geometry.diameter) d = *s.geometry.diameter;
    else
      for (const Side& sd : s.sides) d += b->edges[sd.edge].length;
    g.d_max = std::max(g.d_max, d);
  }
  if (g.s == 0) g.a_max = 1;
  // s * a_max * (2/c)^b * (2r + 1 + d_max)^b
  Rational k = g.s * g.a_max * pow(Rational(2) / g.c, static_cast<unsigned>(g.b));
  Rational binom = 1;
  for (int i = 0; i <= g.b; ++i) {
    g.coefficients.push_back(k * binom * pow(Rational(2), static_cast<unsigned>(i)) * pow(1 + g.d_max, static_cast<unsigned>(g.b - i)));
    binom = binom * (g.b - i) / (i + 1);
  }
  return g;
}

std::vector<long long> leaf_distances(const CarriedSurface& cs, int base) {
  std::vector<long long> dist(cs.sheets.size(), -1);
  std::deque<int> q{base};
  dist[base] = 0;
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    for (auto [g, side] : cs.surface.partner[f])
      if (g >= 0 && dist[g] < 0) {
        dist[g] = dist[f] + 1;
        q.push_back(g);
      }
  }
  return dist;
}

namespace {

int base_index(const BranchedSurface& b, const CarriedSurface& cs, const Weights& w, const Sheet& base) {
  if (base.sector < 0 || base.sector >= b.sector_count() || base.position < 1 || base.position > w[base.sector])
    throw DomainError("invalid base: sector " + std::to_string(base.sector) + " has no sheet " + std::to_string(base.position));
  return cs.sheet_index(base.sector, base.position);
}

} // namespace

std::vector<LeafSample> sample_leaf_balls(const BranchedSurface& b, const CarriedSurface& cs, int base, long long max_radius) {
  if (max_radius < 0) throw DomainError("radius must be nonnegative");
  auto dist = leaf_distances(cs, base);
  std::vector<LeafSample> out(max_radius + 1);
  for (long long r = 0; r <= max_radius; ++r) {
    out[r].base = cs.sheets[base];
    out[r].radius = r;
    out[r].hits.assign(b.sector_count(), 0);
  }
  for (std::size_t f = 0; f < dist.size(); ++f)
    if (dist[f] >= 0 && dist[f] <= max_radius)
      for (long long r = dist[f]; r <= max_radius; ++r) {
        out[r].area++;
        out[r].hits[cs.sheets[f].sector]++;
      }
  return out;
}

LeafSample sample_leaf_ball(const BranchedSurface& b, const Weights& w, const Sheet& base, long long radius) {
  CarriedSurface cs = reconstruct_surface(b, w);
  int i = base_index(b, cs, w, base);
  return sample_leaf_balls(b, cs, i, radius).back();
}

namespace {

std::vector<int> orientation_or_throw(const BranchedSurface& b, const char* what) {
  auto o = transverse_orientation(b);
  if (!o) throw DomainError(std::string(what) + " needs a transversely orientable complex; evaluate on the orientation double cover");
  return *o;
}

} // namespace

long long holonomy_evaluate(const BranchedSurface& b, const Weights& w, const std::vector<LoopCrossing>& loop) {
  require_valid(b);
  require_solution(b, w);
  orientation_or_throw(b, "holonomy");
  if (loop.empty()) throw DomainError("empty loop");
  std::set<std::pair<int, int>> adjacent;
  for (const BranchEdge& e : b.edges)
    for (const auto& x : e.slots)
      for (const auto& y : e.slots) adjacent.insert({x.sector, y.sector});
  long long v = 0;
  for (std::size_t k = 0; k < loop.size(); ++k) {
    const LoopCrossing& c = loop[k];
    if (c.sector < 0 || c.sector >= b.sector_count()) throw DomainError("loop entry " + std::to_string(k) + ": no sector " + std::to_string(c.sector));
    if (c.sign != 1 && c.sign != -1) throw DomainError("loop entry " + std::to_string(k) + ": sign must be +1 or -1");
    const LoopCrossing& next = loop[(k + 1) % loop.size()];
    if (next.sector >= 0 && next.sector < b.sector_count() && next.sector != c.sector && !adjacent.count({c.sector, next.sector}))
      throw DomainError("open path: sectors " + std::to_string(c.sector) + " and " + std::to_string(next.sector) + " are not adjacent");
    v += c.sign * w[c.sector];
  }
  return v;
}

DistinctnessReport distinctness_check(const BranchedSurface& b, const Weights& w, int sector, long long radius, std::optional<Sheet> base) {
  require_valid(b);
  require_solution(b, w);
  std::vector<int> signs = orientation_or_throw(b, "distinctness check");
  if (sector < 0 || sector >= b.sector_count()) throw DomainError("no sector " + std::to_string(sector));
  if (radius < 0) throw DomainError("radius must be nonnegative");
  CarriedSurface cs = reconstruct_surface(b, w);
  DistinctnessReport rep;
  rep.sector = sector;
  rep.radius = radius;
  rep.base = base.value_or(Sheet{sector, 1});
  int bi = base_index(b, cs, w, rep.base);
  auto dist = leaf_distances(cs, bi);
  std::vector<std::pair<long long, long long>> found;  // distance, position
  for (long long p = 1; p <= w[sector]; ++p) {
    long long d = dist[cs.sheet_index(sector, p)];
    if (d >= 0 && d <= radius) found.push_back({d, p});
  }
  if (found.empty()) throw DomainError("fiber over sector " + std::to_string(sector) + " not hit within radius " + std::to_string(radius));
  std::sort(found.begin(), found.end());
  for (auto [d, p] : found) {
    rep.hits.push_back({sector, p});
    // leaf paths carry no transverse measure; the hop back to the first hit crosses |p - p0| sheets
    rep.values.push_back(signs[sector] * (p - found[0].second));
  }
  std::set<long long> seen(rep.values.begin(), rep.values.end());
  rep.distinct = seen.size() == rep.values.size();
  return rep;
}

} // namespace bsurf
