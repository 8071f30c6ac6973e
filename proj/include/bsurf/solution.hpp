#pragma once

#include "bsurf/complex.hpp"
#include "bsurf/linalg.hpp"

#include <optional>
#include <vector>

namespace bsurf {

using Weights = std::vector<long long>;

struct BranchMatrix {
  int columns = 0;
  std::vector<std::vector<long long>> rows;  // one per edge, edge id order
  ZMatrix as_integer() const;
};

BranchMatrix branch_matrix(const BranchedSurface& b);

// First edge whose equation w fails, if any. Requires w.size() == sector count.
std::optional<int> violated_edge(const BranchedSurface& b, const Weights& w);
bool is_solution(const BranchedSurface& b, const Weights& w);
void require_solution(const BranchedSurface& b, const Weights& w);  // DomainError naming the edge

// Vertices of {x >= 0, Ax = 0, sum x = 1}, lexicographically decreasing.
std::vector<std::vector<Rational>> solution_polytope_vertices(const BranchedSurface& b);

// Vertices of {x >= 0, |Ax| <= eps, sum x = 1}.
std::vector<std::vector<Rational>> relaxed_polytope_vertices(const BranchedSurface& b, const Rational& eps);

Weights vertex_surface(const std::vector<Rational>& vertex);
std::vector<Weights> vertex_surfaces(const BranchedSurface& b);

struct FundamentalSet {
  std::vector<Weights> elements;  // lexicographically decreasing
  bool complete = false;
  long long coordinate_bound = 0;
  Integer completeness_bound = 0;  // no Hilbert basis element has a coordinate above this
};

// Largest coordinate any Hilbert basis element can have (see README).
Integer hilbert_coordinate_bound(const BranchedSurface& b);

FundamentalSet fundamental_surfaces(const BranchedSurface& b, long long coordinate_bound);

// All nonzero integral solutions with every coordinate <= max_coord, lexicographically decreasing.
std::vector<Weights> integral_solutions(const BranchedSurface& b, long long max_coord);

// Lexicographically least nonnegative coefficients n with sum n_i F_i = w, or nothing.
std::optional<std::vector<long long>> decompose(const BranchedSurface& b, const Weights& w, const std::vector<Weights>& fundamentals);

bool fully_carries(const Weights& w);

bool in_P_eps(const BranchedSurface& b, const std::vector<Rational>& x, const Rational& eps);

bool lex_greater(const Weights& a, const Weights& b);

} // namespace bsurf
