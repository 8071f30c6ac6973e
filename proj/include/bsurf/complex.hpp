#pragma once

#include "bsurf/arith.hpp"
#include "bsurf/error.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace bsurf {

enum class SectorKind { Disc, Closed };

// Interior corner angles, measured in quarter turns: pi/2 -> 1, pi -> 2.
enum class Angle { Right = 1, Straight = 2 };

inline int quarters(Angle a) { return static_cast<int>(a); }

struct Side {
  int edge = 0;
  int dir = 1;  // +1 runs endpoint[0] -> endpoint[1]
};

struct SectorGeometry {
  std::optional<Rational> area;
  std::optional<Rational> diameter;
  std::optional<Rational> eta;
};

struct Sector {
  int id = 0;
  SectorKind kind = SectorKind::Disc;
  int genus = 0;
  std::vector<Side> sides;
  std::vector<Angle> corners;  // corner m sits at the start of side m
  SectorGeometry geometry;
};

// A slot of a branch edge: which sector side occupies it, and whether the sector's
// reference normal points against the edge's fiber frame.
struct SlotRef {
  int sector = 0;
  int side = 0;
  bool flip = false;
};

enum Slot : int { Top = 0, Bottom = 1, Lower = 2 };

struct BranchEdge {
  int id = 0;
  std::array<SlotRef, 3> slots;  // Top, Bottom, Lower
  std::vector<int> endpoints;    // empty for a smooth circle
  Rational length = 1;

  bool is_circle() const { return endpoints.empty(); }
  const SlotRef& top() const { return slots[Top]; }
  const SlotRef& bottom() const { return slots[Bottom]; }
  const SlotRef& lower() const { return slots[Lower]; }
};

struct VertexCorner {
  int sector = 0;
  int corner = 0;
  Angle angle = Angle::Right;
};

struct BranchVertex {
  int id = 0;
  std::vector<VertexCorner> corners;
};

struct BranchedSurface {
  std::string name;
  std::vector<Sector> sectors;
  std::vector<BranchEdge> edges;
  std::vector<BranchVertex> vertices;
  std::optional<std::vector<int>> orientation;  // per-sector +1/-1

  int sector_count() const { return static_cast<int>(sectors.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

enum class ViolationKind { DanglingReference, CornerAngle, LocalModel, Orientation, Structure };

const char* to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const BranchedSurface& b);

// Throws DomainError carrying the report summary when b is not well-formed.
void require_valid(const BranchedSurface& b);

class InvalidComplex : public DomainError {
public:
  explicit InvalidComplex(ValidationReport r)
      : DomainError("invalid branched surface: " + r.summary()), report_(std::move(r)) {}
  const ValidationReport& report() const { return report_; }

private:
  ValidationReport report_;
};

// Where a sector side sits: edge id and slot.
struct SideSlot {
  int edge = -1;
  int slot = -1;
};

// Per sector, per side. Assumes referential integrity.
std::vector<std::vector<SideSlot>> side_slots(const BranchedSurface& b);

// Transverse orientation consistency of a given sign vector.
bool orientation_consistent(const BranchedSurface& b, const std::vector<int>& signs);

// A consistent sign vector (the given one if present and consistent), or nothing
// when b is not transversely orientable.
std::optional<std::vector<int>> transverse_orientation(const BranchedSurface& b);

// Connected components of the sector adjacency graph.
std::vector<int> sector_components(const BranchedSurface& b, int* count = nullptr);

struct Cellulation {
  int vertex_count = 0;   // branch vertices
  int edge_count = 0;     // branch edges, circles included
  int circle_count = 0;
  int face_count = 0;     // sectors
  int closed_face_count = 0;
  std::vector<std::vector<int>> edge_endpoints;                 // per edge
  std::vector<std::vector<std::pair<int, int>>> face_boundary;  // per face: (edge, dir)
  std::vector<std::vector<std::pair<int, int>>> vertex_ends;    // per vertex: (edge, end)
};

Cellulation build_cellulation(const BranchedSurface& b);

} // namespace bsurf
