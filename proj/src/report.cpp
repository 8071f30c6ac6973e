#include "bsurf/report.hpp"
#include "bsurf/carried.hpp"

namespace bsurf {

namespace {

Json vectors_json(const std::vector<std::vector<Rational>>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(rational_vector_json(v));
  return a;
}

Json weight_list_json(const std::vector<Weights>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(weights_json(w));
  return a;
}

Json sheet_json(const Sheet& s) { return Json{{"sector", s.sector}, {"position", std::to_string(s.position)}}; }

} // namespace

Json matrix_json(const std::vector<std::vector<long long>>& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(weights_json(row));
  return a;
}

Json validate_report(const BranchedSurface& b) {
  ValidationReport r = validate(b);
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(Json{{"kind", to_string(x.kind)}, {"detail", x.detail}});
  Json out{{"name", b.name}, {"valid", r.ok()}, {"sectors", b.sector_count()}, {"edges", b.edge_count()}, {"vertices", b.vertices.size()}};
  if (r.ok()) out["transversely_orientable"] = transverse_orientation(b).has_value();
  out["violations"] = v;
  return out;
}

Json vertices_report(const BranchedSurface& b) {
  auto vs = solution_polytope_vertices(b);
  std::vector<Weights> surfaces;
  for (const auto& v : vs) surfaces.push_back(vertex_surface(v));
  EulerFunctional x = euler_functional(b);
  Json chis = Json::array();
  for (const auto& w : surfaces) chis.push_back(rational_json(evaluate_X(x, w)));
  return Json{{"name", b.name}, {"vertices", vectors_json(vs)}, {"vertex_surfaces", weight_list_json(surfaces)}, {"euler_characteristics", chis}};
}

Json fundamentals_report(const BranchedSurface& b, long long max_coord) {
  FundamentalSet fs = fundamental_surfaces(b, max_coord);
  EulerFunctional x = euler_functional(b);
  Json chis = Json::array();
  for (const auto& w : fs.elements) chis.push_back(rational_json(evaluate_X(x, w)));
  return Json{{"name", b.name},
              {"coordinate_bound", std::to_string(fs.coordinate_bound)},
              {"completeness_bound", integer_json(fs.completeness_bound)},
              {"complete", fs.complete},
              {"elements", weight_list_json(fs.elements)},
              {"euler_characteristics", chis}};
}

Json decompose_report(const BranchedSurface& b, const Weights& w, long long max_coord, bool* found) {
  require_solution(b, w);
  FundamentalSet fs = fundamental_surfaces(b, max_coord);
  auto coef = decompose(b, w, fs.elements);
  if (found) *found = coef.has_value();
  Json out{{"name", b.name}, {"weights", weights_json(w)}, {"fundamentals", weight_list_json(fs.elements)}, {"complete", fs.complete}};
  if (coef) out["coefficients"] = weights_json(*coef);
  else out["coefficients"] = nullptr;
  return out;
}

Json qh_payload(const BranchedSurface& b) {
  QHCertificate c = qh_certificate(b);
  EulerFunctional x = euler_functional(b);
  Json support = Json::array();
  for (bool s : c.support) support.push_back(s);
  Json out{{"name", b.name}, {"euler_coefficients", rational_vector_json(x.coefficients)}, {"vertices", vectors_json(c.vertices)}};
  out["max_x"] = c.vertices.empty() ? Json(nullptr) : rational_json(c.max_x);
  out["min_x"] = c.vertices.empty() ? Json(nullptr) : rational_json(c.min_x);
  out["attaining_vertex"] = c.attaining_vertex ? rational_vector_json(*c.attaining_vertex) : Json(nullptr);
  out["support"] = support;
  out["full_support"] = c.full_support;
  out["verdict"] = c.verdict;
  out["reason"] = c.reason;
  return out;
}

Json iso_payload(const BranchedSurface& b) {
  Json out{{"name", b.name}};
  Json body = iso_to_json(iso_constants(b));
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  out["rule"] = "C0 = -min X, C1 = -max X / 2 over the solution polytope; eps1 is the first of 1, 1/2, 1/4, ... with max X <= -C1 on the relaxed polytope";
  return out;
}

Json iso_check_report(const BranchedSurface& b, const DiscInstance& a, const IsoCertificate& cert, bool* pass) {
  IsoReport r = check_isoperimetric(b, a, cert);
  if (pass) *pass = r.pass;
  Json out{{"instance", a.name}, {"case", std::string(1, r.case_label)}, {"pass", r.pass}, {"area", std::to_string(r.area)},
           {"length", std::to_string(r.length)}, {"chi", std::to_string(r.chi)}, {"x", rational_vector_json(r.x)}};
  if (r.case_label == 'a') {
    out["chain"] = rational_vector_json({r.l1, r.l2, r.l3, r.l4, r.l5});
  } else {
    out["witness_edge"] = r.witness_edge ? Json(*r.witness_edge) : Json(nullptr);
    out["witness_traversals"] = std::to_string(r.witness_traversals);
    out["residual"] = rational_json(r.residual);
  }
  out["checks"] = r.checks;
  return out;
}

Json gauss_bonnet_report(const BranchedSurface& b, const DiscInstance& a, bool* zero) {
  InstanceAnalysis an = analyze_instance(b, a);
  Rational d = gauss_bonnet_defect(b, a);
  if (zero) *zero = d == 0;
  Json declared = Json::object(), computed = Json::object();
  for (auto [i, n] : a.corner_counts) declared[std::to_string(i)] = std::to_string(n);
  for (auto [i, n] : an.corners) computed[std::to_string(i)] = std::to_string(n);
  return Json{{"instance", a.name},       {"chi", std::to_string(an.chi)},  {"area", std::to_string(an.area)},
              {"length", std::to_string(an.length)}, {"declared_corners", declared}, {"computed_corners", computed},
              {"defect", rational_json(d)}};
}

Json growth_payload(const BranchedSurface& b) {
  GrowthPolynomial g = growth_polynomial(b);
  HomologyData h = homology_rank_b(g.lifted ? orientation_double_cover(b).cover : b);
  Json cocycles = Json::array();
  for (const auto& v : h.cocycles) cocycles.push_back(integer_vector_json(v));
  return Json{{"name", b.name},
              {"lifted", g.lifted},
              {"b", g.b},
              {"torsion", integer_vector_json(h.torsion)},
              {"one_cells", h.complex.one_cells},
              {"cocycles", cocycles},
              {"c", rational_json(g.c)},
              {"s", g.s},
              {"a_max", rational_json(g.a_max)},
              {"d_max", rational_json(g.d_max)},
              {"h", "h(n) = (2n/c)^b"},
              {"formula", g.formula()},
              {"coefficients", rational_vector_json(g.coefficients)}};
}

Json growth_sample_report(const BranchedSurface& b, const Weights& w, long long radius, long long base) {
  CarriedSurface cs = reconstruct_surface(b, w);
  if (base < 0 || base >= static_cast<long long>(cs.sheets.size()))
    throw DomainError("invalid base: sheet " + std::to_string(base) + " does not exist (" + std::to_string(cs.sheets.size()) + " sheets)");
  LeafSample s = sample_leaf_balls(b, cs, static_cast<int>(base), radius).back();
  GrowthPolynomial g = growth_polynomial(b);
  Json hits = Json::array();
  for (long long x : s.hits) hits.push_back(std::to_string(x));
  Rational p = g(radius), hb = count_bound_h(2 * radius + 1, g.b, g.c);
  long long max_hit = 0;
  for (long long x : s.hits) max_hit = std::max(max_hit, x);
  return Json{{"name", b.name},
              {"weights", weights_json(w)},
              {"base", base},
              {"base_sheet", sheet_json(s.base)},
              {"radius", std::to_string(radius)},
              {"area", std::to_string(s.area)},
              {"hits", hits},
              {"p_r", rational_json(p)},
              {"h_bound", rational_json(hb)},
              {"within_bounds", Rational(s.area) <= p && Rational(max_hit) <= hb}};
}

Json holonomy_report(const BranchedSurface& b, const Weights& w, const std::vector<LoopCrossing>& loop) {
  long long v = holonomy_evaluate(b, w, loop);
  return Json{{"name", b.name}, {"weights", weights_json(w)}, {"crossings", loop.size()}, {"value", std::to_string(v)}};
}

Json cover_report(const OrientationCover& oc) {
  return Json{{"name", oc.cover.name},       {"connected", oc.connected},     {"trivial", oc.trivial},
              {"sectors", oc.cover.sector_count()}, {"sector_map", oc.sector_map}, {"edge_map", oc.edge_map},
              {"vertex_map", oc.vertex_map}};
}

Json hb_report(const HorizontalBoundary& hb) {
  Json comps = Json::array();
  for (const auto& c : hb.components) {
    Json faces = Json::array();
    for (int f : c.faces) faces.push_back(Json{{"sector", f / 2}, {"side", f % 2 ? "bottom" : "top"}});
    comps.push_back(Json{{"chi", std::to_string(c.chi)}, {"boundary_circles", c.boundary_circles}, {"orientable", c.orientable}, {"faces", faces}});
  }
  Json gl = Json::array();
  for (const auto& g : hb.gluings) gl.push_back({g.face_a, g.side_a, g.face_b, g.side_b});
  return Json{{"components", comps}, {"total_chi", std::to_string(hb.total_chi())}, {"gluings", gl}};
}

Json large_report(const LargeReport& r) {
  Json off = Json::array();
  for (int c : r.offenders) {
    const auto& k = r.boundary.components[c];
    off.push_back(Json{{"component", c}, {"type", k.chi == 1 ? "disc" : "annulus"}, {"chi", std::to_string(k.chi)}, {"boundary_circles", k.boundary_circles}});
  }
  return Json{{"large", r.large}, {"offenders", off}, {"components", r.boundary.components.size()}};
}

Json split_move_json(const SplitMove& mv) {
  return Json{{"edge", mv.edge},
              {"datum", weights_json({mv.to_top, mv.to_bottom})},
              {"degenerate", mv.degenerate},
              {"sectors", mv.result.complex.sector_count()},
              {"edges", mv.result.complex.edge_count()},
              {"weights", weights_json(mv.result.weights)},
              {"matrix", matrix_json(mv.result.matrix)},
              {"regular", mv.regular},
              {"new_components", mv.new_components}};
}

Json split_payload(const BranchedSurface& b, const Weights& w, std::optional<int> edge, int budget, BranchedSurface* result) {
  Json out{{"name", b.name}, {"weights", weights_json(w)}};
  if (edge) {
    require_solution(b, w);
    if (*edge < 0 || *edge >= b.edge_count()) throw DomainError("no edge " + std::to_string(*edge));
    const BranchEdge& e = b.edges[*edge];
    SplitMove mv = edge_split(b, w, *edge, w[e.top().sector], w[e.bottom().sector]);
    out["move"] = split_move_json(mv);
    out["log"] = mv.result.log;
    out["final_weights"] = weights_json(mv.result.weights);
    out["matrix"] = matrix_json(mv.result.matrix);
    out["final_complex"] = complex_to_json(mv.result.complex);
    if (result) *result = mv.result.complex;
    return out;
  }
  SplitChain ch = split_until_large(b, w, budget);
  Json steps = Json::array();
  for (const auto& mv : ch.steps) steps.push_back(split_move_json(mv));
  out["budget"] = budget;
  out["outcome"] = to_string(ch.outcome);
  out["steps"] = steps;
  out["final_weights"] = weights_json(ch.final_weights);
  out["matrix"] = matrix_json(ch.matrix);
  out["final_complex"] = complex_to_json(ch.final_complex);
  out["note"] = "discs of contact are not detected";
  if (result) *result = ch.final_complex;
  return out;
}

Json genus_payload(const BranchedSurface& b, long long max_coord, std::optional<Integer> k, std::optional<CeilingParams> params) {
  GenusBoundCertificate g = genus_bound(b, max_coord, k, params);
  Json tower = Json::array();
  for (const auto& t : g.ceiling.tower) tower.push_back(integer_json(t));
  return Json{{"name", g.name},
              {"coordinate_bound", std::to_string(g.coordinate_bound)},
              {"completeness_bound", integer_json(g.completeness_bound)},
              {"fundamentals", weight_list_json(g.fundamentals)},
              {"euler_characteristics", rational_vector_json(g.chis)},
              {"k", g.constants.k},
              {"C0", std::to_string(g.constants.c0)},
              {"C", std::to_string(g.constants.c)},
              {"params", params_to_json(g.params)},
              {"K", integer_json(g.ceiling.k_base)},
              {"K_source", g.k_chosen ? kChooseKRule : "supplied"},
              {"tower", tower},
              {"K_star", integer_json(g.ceiling.k_star())},
              {"sum_abs_chi", rational_json(g.sum_abs_chi)},
              {"G", integer_json(g.genus_bound)},
              {"G_rule", "G = 1 + ceil(K_star * sum_abs_chi / 2)"},
              {"statement", "if every fundamental coefficient n_i is below K_star then chi(S) > -K_star * sum |chi(F_i)|, so genus(S) <= G"},
              {"caveats", g.caveats}};
}

} // namespace bsurf
