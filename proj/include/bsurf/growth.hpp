#pragma once

#include "bsurf/carried.hpp"
#include "bsurf/linalg.hpp"

#include <string>

namespace bsurf {

// Cell structure of B: branch vertices, one basepoint per circle edge and per closed
// sector; 1-cells are the branch edges plus 2g loops per closed sector of genus g.
struct ChainComplex {
  int cells[3] = {0, 0, 0};
  ZMatrix d1;  // cells[0] x cells[1]
  ZMatrix d2;  // cells[1] x cells[2]
  std::vector<std::string> one_cells;
};

ChainComplex cell_chain_complex(const BranchedSurface& b);

// A crossing of a leaf path from one sector into a neighbour through a branch edge.
struct DualCrossing {
  int edge = 0;
  int from_sector = 0, from_side = 0;
  int to_sector = 0, to_side = 0;
};

std::vector<DualCrossing> dual_crossings(const BranchedSurface& b);

struct HomologyData {
  int b = 0;
  std::vector<Integer> torsion;
  ChainComplex complex;
  std::vector<std::vector<Integer>> cocycles;          // values on 1-cells
  std::vector<std::vector<Integer>> crossing_values;   // per cocycle, per dual crossing
};

HomologyData homology_rank_b(const BranchedSurface& b);

Rational intersection_constant_c(const HomologyData& h);

Rational count_bound_h(const Rational& n, int b, const Rational& c);

struct GrowthPolynomial {
  int b = 0;
  Rational c = 1;
  int s = 0;
  Rational a_max = 1;
  Rational d_max = 0;
  bool lifted = false;  // computed on the orientation double cover
  std::vector<Rational> coefficients;  // ascending powers of r

  Rational operator()(const Rational& r) const;
  std::string formula() const;
};

GrowthPolynomial growth_polynomial(const BranchedSurface& b);

struct LeafSample {
  Sheet base;
  long long radius = 0;
  long long area = 0;
  std::vector<long long> hits;  // per sector
};

LeafSample sample_leaf_ball(const BranchedSurface& b, const Weights& w, const Sheet& base, long long radius);

// Distances from one sheet to every sheet of its leaf (-1 when unreachable).
std::vector<long long> leaf_distances(const CarriedSurface& cs, int base);

// Samples for every radius 0..max_radius from one base sheet.
std::vector<LeafSample> sample_leaf_balls(const BranchedSurface& b, const CarriedSurface& cs, int base, long long max_radius);

struct LoopCrossing {
  int sector = 0;
  int sign = 1;
};

long long holonomy_evaluate(const BranchedSurface& b, const Weights& w, const std::vector<LoopCrossing>& loop);

struct DistinctnessReport {
  Sheet base;
  int sector = 0;
  long long radius = 0;
  std::vector<Sheet> hits;
  std::vector<long long> values;
  bool distinct = true;
};

DistinctnessReport distinctness_check(const BranchedSurface& b, const Weights& w, int sector, long long radius, std::optional<Sheet> base = std::nullopt);

} // namespace bsurf
