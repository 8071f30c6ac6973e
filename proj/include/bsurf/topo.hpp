#pragma once

#include "bsurf/solution.hpp"
#include "bsurf/surface.hpp"

#include <set>
#include <string>

namespace bsurf {

struct OrientationCover {
  BranchedSurface cover;
  // cover sector 2s and 2s+1 lie over sector s; likewise for edges and vertices
  std::vector<int> sector_map, edge_map, vertex_map;
  bool connected = false;  // every component of B has a connected preimage
  bool trivial = false;    // B was already transversely orientable

  Weights pullback(const Weights& w) const;
  int deck_sector(int s) const { return s ^ 1; }
  int deck_edge(int e) const { return e ^ 1; }
  int deck_vertex(int v) const { return v ^ 1; }
};

OrientationCover orientation_double_cover(const BranchedSurface& b);

struct HorizontalBoundary {
  struct Component {
    long long chi = 0;
    int boundary_circles = 0;
    bool orientable = true;
    std::vector<int> faces;  // face 2s is the top of sector s, 2s+1 its bottom
  };
  std::vector<Component> components;
  std::vector<SideGluing> gluings;
  GluedSurface surface;

  long long total_chi() const;
  bool is_offender(int c) const;
};

// Requires a transversely orientable complex (DomainError otherwise).
HorizontalBoundary horizontal_boundary(const BranchedSurface& b);
// Same construction without the orientability requirement.
HorizontalBoundary horizontal_boundary_any(const BranchedSurface& b);

struct LargeReport {
  bool large = true;
  std::vector<int> offenders;  // component indices
  HorizontalBoundary boundary;
};

LargeReport is_horizontally_large(const BranchedSurface& b);

// Euler characteristic of B itself (refined cell structure).
long long complex_euler_characteristic(const BranchedSurface& b);

// Complex obtained by cutting sector stacks of the surface carried by w into groups and
// merging groups across edges where they continue without branching.
struct Regrouping {
  BranchedSurface complex;
  Weights weights;                         // per new sector
  std::vector<std::vector<long long>> matrix;  // rows: old sectors, columns: new sectors
  std::vector<std::string> log;
  struct Group {
    int sector = 0;
    long long lo = 1, hi = 1;  // sheet positions in the old sector frame
    int region = 0;            // new sector
    int frame = 0;             // 1 when the group's frame is opposite to the new sector's
  };
  std::vector<Group> groups;
  std::vector<int> kept_sectors;  // old sectors with positive weight
};

Regrouping regroup(const BranchedSurface& b, const Weights& w, const std::vector<std::set<long long>>& cuts);

Regrouping support_subbranched(const BranchedSurface& b, const Weights& w);

struct SplitMove {
  int edge = 0;
  long long to_top = 0, to_bottom = 0;  // pass datum
  bool degenerate = false;
  std::vector<std::set<long long>> cuts;
  Regrouping result;
  bool regular = true;
  std::vector<int> new_components;  // horizontal boundary components of B' not reached from B
};

SplitMove edge_split(const BranchedSurface& b, const Weights& w, int edge, long long to_top, long long to_bottom);

struct SplitChain {
  enum class Outcome { Large, BudgetExhausted, Stuck };
  Outcome outcome = Outcome::Large;
  std::vector<SplitMove> steps;
  BranchedSurface final_complex;
  Weights final_weights;
  std::vector<std::vector<long long>> matrix;  // composite: old sectors x final sectors
};

const char* to_string(SplitChain::Outcome o);

SplitChain split_until_large(const BranchedSurface& b, const Weights& w, int step_budget);

std::vector<std::vector<long long>> multiply(const std::vector<std::vector<long long>>& a, const std::vector<std::vector<long long>>& b);
Weights apply_matrix(const std::vector<std::vector<long long>>& m, const Weights& y);

} // namespace bsurf
