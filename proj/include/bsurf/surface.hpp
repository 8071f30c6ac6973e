#pragma once

#include "bsurf/complex.hpp"

#include <utility>
#include <vector>

namespace bsurf {

// Glues copies of sector polygons along sides lying over the same branch edge.
// Shared by surface reconstruction, the horizontal boundary, disc instances and
// sector merging.

struct SideGluing {
  int face_a = 0, side_a = 0;
  int face_b = 0, side_b = 0;
};

struct GluedSurface {
  struct Component {
    std::vector<int> faces;
    long long chi = 0;
    int boundary_circles = 0;
    int free_sides = 0;
    bool orientable = true;
  };
  std::vector<int> face_sector;
  std::vector<Component> components;
  std::vector<int> face_component;
  std::vector<int> face_parity;  // orientation relative to the component root, valid when orientable
  std::vector<int> corner_offset;
  std::vector<int> corner_point;  // global corner index -> point id
  int point_count = 0;
  std::vector<int> point_quarters;  // total angle at the point in quarter turns
  std::vector<bool> point_on_boundary;
  std::vector<std::vector<std::pair<int, int>>> partner;  // per face, per side: glued (face, side) or (-1, -1)

  long long total_chi() const;
  int point_of(int face, int corner) const { return corner_point[corner_offset[face] + corner]; }
  bool is_free(int face, int side) const { return partner[face][side].first < 0; }
};

// Point at edge end `end` (0 or 1) of side `side` of a disc sector: the corner index.
int side_end_corner(const Sector& s, int side, int end);

GluedSurface glue_faces(const BranchedSurface& b, const std::vector<int>& face_sector, const std::vector<SideGluing>& gluings);

} // namespace bsurf
