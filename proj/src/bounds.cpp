#include "bsurf/bounds.hpp"
#include "bsurf/euler.hpp"

#include <algorithm>
#include <cmath>

namespace bsurf {

SectorConstants sector_constants(const std::vector<Weights>& fundamentals) {
  if (fundamentals.empty()) throw DomainError("empty fundamental set");
  SectorConstants s;
  s.k = static_cast<long long>(fundamentals.size());
  for (const Weights& f : fundamentals)
    for (long long x : f) s.c0 = std::max(s.c0, x);
  s.c = s.k * s.c0;
  return s;
}

WeightCeiling weight_ceiling(const Integer& k_base, int levels) {
  if (k_base < 2) throw DomainError("K must be at least 2");
  if (levels < 1) throw DomainError("the tower needs at least one level");
  double bits = std::pow(10.0, levels) * static_cast<double>(msb(k_base) + 1);
  if (bits > static_cast<double>(kTowerBitLimit))
    throw DomainError("K_" + std::to_string(levels) + " = K^(10^" + std::to_string(levels) + ") is too large to expand");
  WeightCeiling w;
  w.k_base = k_base;
  Integer cur = k_base;
  for (int i = 1; i <= levels; ++i) {
    cur = pow(cur, 10UL);  // K_i = K_{i-1}^10
    w.tower.push_back(cur);
  }
  return w;
}

CeilingParams default_ceiling_params(const BranchedSurface& b) {
  Rational longest = 1;
  for (const Sector& s : b.sectors) {
    Rational len = 0;
    for (const Side& sd : s.sides) len += b.edges[sd.edge].length;
    longest = std::max(longest, len);
  }
  Integer v = ceil_of(longest);
  return {v, v, v};
}

const char* const kChooseKRule = "smallest K >= 2 with K^10 > 4*(r_max*C + s0*s1*C^2)";

Integer choose_K(const Integer& c, const CeilingParams& p) {
  Integer target = 4 * (p.r_max * c + p.s0 * p.s1 * c * c);
  Integer k = 2;
  while (pow(k, 10UL) <= target) ++k;
  return k;
}

Integer genus_from(const Integer& k_star, const Rational& sum_abs_chi) {
  return 1 + ceil_of(Rational(k_star) * sum_abs_chi / 2);
}

GenusBoundCertificate genus_bound(const BranchedSurface& b, long long coordinate_bound, std::optional<Integer> k, std::optional<CeilingParams> params) {
  QHCertificate qh = qh_certificate(b);
  if (!qh.verdict) throw DomainError("not quasi-hyperbolic: " + qh.reason);
  FundamentalSet fs = fundamental_surfaces(b, coordinate_bound);
  if (!fs.complete)
    throw DomainError("fundamental set incomplete: coordinate bound " + std::to_string(coordinate_bound) + " is below the completeness bound " +
                      format_integer(fs.completeness_bound));
  GenusBoundCertificate g;
  g.name = b.name;
  g.fundamentals = fs.elements;
  g.coordinate_bound = coordinate_bound;
  g.completeness_bound = fs.completeness_bound;
  EulerFunctional x = euler_functional(b);
  for (const Weights& f : fs.elements) {
    Rational chi = evaluate_X(x, f);
    g.chis.push_back(chi);
    g.sum_abs_chi += abs(chi);
  }
  g.constants = sector_constants(fs.elements);
  g.params = params.value_or(default_ceiling_params(b));
  g.k_chosen = !k.has_value();
  Integer kb = k ? *k : choose_K(Integer(g.constants.c), g.params);
  g.ceiling = weight_ceiling(kb, static_cast<int>(g.constants.k));
  g.genus_bound = genus_from(g.ceiling.k_star(), g.sum_abs_chi);
  g.caveats = {
      "conditional: assumes the weak reducibility theorem for quasi-hyperbolic branched surfaces applies with these constants",
      "the geometric splitting steps behind that theorem are not carried out here",
      "the rule for K is one admissible instantiation of unspecified constants",
      "discs of contact and essentiality of compressing discs are not checked",
  };
  return g;
}

} // namespace bsurf
