#include "bsurf/euler.hpp"

#include <algorithm>
#include <set>

namespace bsurf {

Rational x_coefficient(int sides, int right_corners, int straight_corners) {
  return Rational(1) - Rational(sides, 2) + Rational(right_corners, 4) + Rational(straight_corners, 2);
}

EulerFunctional euler_functional(const BranchedSurface& b) {
  require_valid(b);
  EulerFunctional x;
  for (const Sector& s : b.sectors) {
    if (s.kind == SectorKind::Closed) {
      x.coefficients.emplace_back(2 - 2 * s.genus);
      continue;
    }
    int right = 0, straight = 0;
    for (Angle a : s.corners) (a == Angle::Right ? right : straight)++;
    x.coefficients.push_back(x_coefficient(static_cast<int>(s.sides.size()), right, straight));
  }
  return x;
}

Rational evaluate_X(const EulerFunctional& x, const std::vector<Rational>& w) {
  if (w.size() != x.coefficients.size()) throw DomainError("dimension mismatch: " + std::to_string(w.size()) + " weights for " + std::to_string(x.coefficients.size()) + " sectors");
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * x.coefficients[i];
  return s;
}

Rational evaluate_X(const EulerFunctional& x, const Weights& w) {
  std::vector<Rational> q;
  for (long long v : w) q.emplace_back(v);
  return evaluate_X(x, q);
}

QHCertificate qh_certificate(const BranchedSurface& b) {
  QHCertificate c;
  EulerFunctional x = euler_functional(b);
  c.vertices = solution_polytope_vertices(b);
  c.support.assign(b.sector_count(), false);
  if (c.vertices.empty()) {
    c.reason = "carries nothing";
    return c;
  }
  bool first = true;
  for (const auto& v : c.vertices) {
    Rational val = evaluate_X(x, v);
    if (first || val > c.max_x) {
      c.max_x = val;
      c.attaining_vertex = v;
    }
    if (first || val < c.min_x) c.min_x = val;
    first = false;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] > 0) c.support[i] = true;
  }
  c.full_support = std::all_of(c.support.begin(), c.support.end(), [](bool s) { return s; });
  c.verdict = c.max_x < 0 && c.full_support;
  if (c.max_x >= 0) c.reason = "carries a surface with nonnegative Euler characteristic";
  else if (!c.full_support) c.reason = "does not fully carry a surface";
  return c;
}

IsoCertificate iso_constants(const BranchedSurface& b) {
  QHCertificate qh = qh_certificate(b);
  if (!qh.verdict) throw DomainError("not quasi-hyperbolic: " + qh.reason);
  EulerFunctional x = euler_functional(b);
  IsoCertificate c;
  c.c0 = -qh.min_x;
  c.c1 = -qh.max_x / 2;
  Rational eps = 1;
  for (int step = 0; step < 64; ++step, eps /= 2) {
    auto verts = relaxed_polytope_vertices(b, eps);
    Rational m = 0;
    bool first = true;
    for (const auto& v : verts) {
      Rational val = evaluate_X(x, v);
      if (first || val > m) m = val;
      first = false;
    }
    if (!first && m <= -c.c1) {
      c.eps1 = eps;
      c.max_x_relaxed = m;
      c.audit = std::move(verts);
      return c;
    }
  }
  throw DomainError("no admissible eps1 found in the halving sequence");
}

std::optional<std::string> audit_iso(const BranchedSurface& b, const IsoCertificate& cert) {
  EulerFunctional x = euler_functional(b);
  if (cert.c1 <= 0 || cert.eps1 <= 0) return "constants must be positive";
  if (cert.audit.empty()) return "empty audit";
  for (std::size_t k = 0; k < cert.audit.size(); ++k) {
    const auto& v = cert.audit[k];
    std::string where = "audit[" + std::to_string(k) + "]";
    if (static_cast<int>(v.size()) != b.sector_count()) return where + ": wrong dimension";
    try {
      if (!in_P_eps(b, v, cert.eps1)) return where + ": outside the relaxed polytope";
    } catch (const DomainError& e) {
      return where + ": " + e.what();
    }
    if (evaluate_X(x, v) > -cert.c1) return where + ": X exceeds -C1";
  }
  return std::nullopt;
}

InstanceAnalysis analyze_instance(const BranchedSurface& b, const DiscInstance& a) {
  require_valid(b);
  InstanceAnalysis out;
  if (a.sheets.empty()) throw DomainError("instance has no sheets");
  for (std::size_t i = 0; i < a.sheets.size(); ++i) {
    int s = a.sheets[i];
    if (s < 0 || s >= b.sector_count()) throw DomainError("sheet " + std::to_string(i) + ": no sector " + std::to_string(s));
    if (b.sectors[s].kind != SectorKind::Disc) throw DomainError("sheet " + std::to_string(i) + ": closed sectors cannot lie in a disc or annulus");
  }
  auto slots = side_slots(b);
  int nf = static_cast<int>(a.sheets.size());
  std::set<std::pair<int, int>> used;
  for (std::size_t k = 0; k < a.gluings.size(); ++k) {
    const SideGluing& g = a.gluings[k];
    std::string where = "gluing " + std::to_string(k);
    for (auto [f, m] : {std::pair{g.face_a, g.side_a}, std::pair{g.face_b, g.side_b}}) {
      if (f < 0 || f >= nf) throw DomainError(where + ": no sheet " + std::to_string(f));
      if (m < 0 || m >= static_cast<int>(b.sectors[a.sheets[f]].sides.size())) throw DomainError(where + ": no side " + std::to_string(m));
      if (!used.insert({f, m}).second) throw DomainError(where + ": side glued twice");
    }
    SideSlot p = slots[a.sheets[g.face_a]][g.side_a], q = slots[a.sheets[g.face_b]][g.side_b];
    if (p.edge != q.edge) throw DomainError(where + ": sides lie on different branch edges");
    if ((p.slot == Lower) == (q.slot == Lower)) throw DomainError(where + ": must pair the lower branch with an upper branch");
  }
  out.surface = glue_faces(b, a.sheets, a.gluings);
  if (out.surface.components.size() != 1) throw DomainError("instance is not connected");
  const auto& comp = out.surface.components[0];
  out.chi = comp.chi;
  if (!comp.orientable) throw DomainError("instance is not orientable");
  bool disc = comp.chi == 1 && comp.boundary_circles == 1;
  bool annulus = comp.chi == 0 && comp.boundary_circles == 2;
  if (!disc && !annulus) throw DomainError("instance is neither a disc nor an annulus (chi " + std::to_string(comp.chi) + ", " + std::to_string(comp.boundary_circles) + " boundary circles)");
  out.area = nf;
  out.sheet_counts.assign(b.sector_count(), 0);
  for (int s : a.sheets) out.sheet_counts[s]++;
  out.traversals.assign(b.edge_count(), 0);
  std::multiset<int> free_edges;
  for (int f = 0; f < nf; ++f) {
    const Sector& s = b.sectors[a.sheets[f]];
    for (int m = 0; m < static_cast<int>(s.sides.size()); ++m)
      if (out.surface.is_free(f, m)) {
        free_edges.insert(s.sides[m].edge);
        out.traversals[s.sides[m].edge]++;
      }
  }
  out.length = static_cast<long long>(free_edges.size());
  std::multiset<int> declared;
  for (int e : a.boundary) {
    if (e < 0 || e >= b.edge_count()) throw DomainError("boundary edge " + std::to_string(e) + " is not in the branch locus");
    declared.insert(e);
  }
  if (declared != free_edges) throw DomainError("declared boundary does not match the free sides of the instance");
  for (int p = 0; p < out.surface.point_count; ++p) {
    if (out.surface.point_on_boundary[p]) out.corners[out.surface.point_quarters[p]]++;
    else if (out.surface.point_quarters[p] != 4) out.interior_flat = false;
  }
  return out;
}

namespace {

Rational corner_term(const std::map<int, long long>& counts) {
  Rational s = 0;
  for (auto [i, n] : counts) s += (Rational(1) - Rational(i, 4)) * n;
  return s;
}

Rational sheet_x(const BranchedSurface& b, const InstanceAnalysis& an) {
  EulerFunctional x = euler_functional(b);
  return evaluate_X(x, Weights(an.sheet_counts.begin(), an.sheet_counts.end()));
}

} // namespace

Rational gauss_bonnet_defect(const BranchedSurface& b, const DiscInstance& a) {
  InstanceAnalysis an = analyze_instance(b, a);
  Rational rhs = Rational(-an.length, 2) + corner_term(a.corner_counts);
  return Rational(an.chi) - sheet_x(b, an) - rhs;
}

IsoReport check_isoperimetric(const BranchedSurface& b, const DiscInstance& a, const IsoCertificate& cert) {
  if (auto bad = audit_iso(b, cert)) throw DomainError("certificate does not match the complex: " + *bad);
  InstanceAnalysis an = analyze_instance(b, a);
  std::map<int, long long> declared;
  for (auto [i, n] : a.corner_counts)
    if (n) declared[i] = n;
  if (declared != an.corners) throw DomainError("declared corner counts do not match the instance");
  if (!an.interior_flat) throw DomainError("instance is not carried: an interior point has total angle other than 2pi");
  IsoReport r;
  r.area = an.area;
  r.length = an.length;
  r.chi = an.chi;
  for (long long n : an.sheet_counts) r.x.emplace_back(n, an.area);
  if (in_P_eps(b, r.x, cert.eps1)) {
    r.case_label = 'a';
    auto count = [&](int i) { auto it = an.corners.find(i); return it == an.corners.end() ? 0LL : it->second; };
    r.l1 = cert.c1 * an.area;
    r.l2 = Rational(an.chi) - sheet_x(b, an);
    r.l3 = Rational(-an.length, 2) + corner_term(an.corners);
    r.l4 = Rational(3 * count(1), 4) + Rational(count(2), 2) + Rational(count(3), 4);
    r.l5 = an.length;
    bool s1 = r.l1 <= r.l2, s2 = r.l2 == r.l3, s3 = r.l3 <= r.l4, s4 = r.l4 <= r.l5;
    bool fin = r.l1 <= r.l5;
    r.checks = {
        std::string("C1*area <= chi(A) - X(x(A)): ") + (s1 ? "ok" : "FAIL"),
        std::string("chi(A) - X(x(A)) = -|e|/2 + sum (1 - i/4)|v_i|: ") + (s2 ? "ok" : "FAIL"),
        std::string("-|e|/2 + sum (1 - i/4)|v_i| <= 3|v1|/4 + |v2|/2 + |v3|/4: ") + (s3 ? "ok" : "FAIL"),
        std::string("3|v1|/4 + |v2|/2 + |v3|/4 <= length: ") + (s4 ? "ok" : "FAIL"),
        std::string("C1*area <= length: ") + (fin ? "ok" : "FAIL"),
    };
    r.pass = s1 && s2 && s3 && s4 && fin;
  } else {
    r.case_label = 'b';
    Rational need = cert.eps1 * an.area;
    for (const BranchEdge& e : b.edges) {
      long long t = an.traversals[e.id];
      if (Rational(t) >= need && (!r.witness_edge || t > r.witness_traversals)) {
        r.witness_edge = e.id;
        r.witness_traversals = t;
        r.residual = an.sheet_counts[e.top().sector] + an.sheet_counts[e.bottom().sector] - an.sheet_counts[e.lower().sector];
      }
    }
    bool s1 = r.witness_edge.has_value();
    bool s2 = Rational(an.area) <= Rational(an.length) / cert.eps1;
    r.checks = {
        std::string("some edge traversed at least eps1*area times: ") + (s1 ? "ok" : "FAIL"),
        std::string("area <= length/eps1: ") + (s2 ? "ok" : "FAIL"),
    };
    r.pass = s1 && s2;
  }
  return r;
}

} // namespace bsurf
