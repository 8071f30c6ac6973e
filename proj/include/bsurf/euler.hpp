#pragma once

#include "bsurf/solution.hpp"
#include "bsurf/surface.hpp"

#include <map>
#include <optional>
#include <string>

namespace bsurf {

struct EulerFunctional {
  std::vector<Rational> coefficients;  // per sector
};

// 1 - sides/2 + right/4 + straight/2 for a disc sector.
Rational x_coefficient(int sides, int right_corners, int straight_corners);

EulerFunctional euler_functional(const BranchedSurface& b);
Rational evaluate_X(const EulerFunctional& x, const std::vector<Rational>& w);
Rational evaluate_X(const EulerFunctional& x, const Weights& w);

struct QHCertificate {
  Rational max_x = 0;
  Rational min_x = 0;
  bool full_support = false;
  bool verdict = false;
  std::string reason;
  std::optional<std::vector<Rational>> attaining_vertex;
  std::vector<bool> support;  // union of vertex supports
  std::vector<std::vector<Rational>> vertices;
};

QHCertificate qh_certificate(const BranchedSurface& b);

struct IsoCertificate {
  Rational c0 = 0;
  Rational c1 = 0;
  Rational eps1 = 0;
  Rational max_x_relaxed = 0;
  std::vector<std::vector<Rational>> audit;  // vertices of the relaxed polytope at eps1
};

IsoCertificate iso_constants(const BranchedSurface& b);

// Recomputes the audit claims: every audited vertex lies in the simplex, satisfies
// |Ax| <= eps1 and has X <= -C1. Returns the first failure, or nothing.
std::optional<std::string> audit_iso(const BranchedSurface& b, const IsoCertificate& cert);

// A cellulated disc or annulus carried by B with boundary on the branch locus.
struct DiscInstance {
  std::string name;
  std::vector<int> sheets;  // sector per sheet
  std::vector<SideGluing> gluings;
  std::vector<int> boundary;  // branch edges traversed by the boundary (multiset)
  std::map<int, long long> corner_counts;  // i -> number of boundary corners of angle i*pi/2
};

struct InstanceAnalysis {
  GluedSurface surface;
  long long chi = 0;
  long long area = 0;
  long long length = 0;  // boundary edge traversals
  std::map<int, long long> corners;  // computed boundary corner counts
  std::vector<long long> sheet_counts;  // per sector
  std::vector<long long> traversals;    // per edge
  bool interior_flat = true;            // every interior point has total angle 2pi
};

// Structural checks (sheets, gluings, disc/annulus, boundary multiset); throws DomainError.
// Declared corner counts are not compared here.
InstanceAnalysis analyze_instance(const BranchedSurface& b, const DiscInstance& a);

Rational gauss_bonnet_defect(const BranchedSurface& b, const DiscInstance& a);

struct IsoReport {
  char case_label = 'a';  // 'a': x(A) in P_eps1, 'b': outside
  bool pass = false;
  long long area = 0, length = 0;
  long long chi = 0;
  std::vector<Rational> x;  // normalized weight vector
  // case (a) chain L1 <= L2 = L3 <= L4 <= L5
  Rational l1, l2, l3, l4, l5;
  std::vector<std::string> checks;  // one line per verified step
  std::optional<int> witness_edge;   // case (b)
  long long witness_traversals = 0;
  Rational residual = 0;
};

IsoReport check_isoperimetric(const BranchedSurface& b, const DiscInstance& a, const IsoCertificate& cert);

} // namespace bsurf
