#pragma once

#include "bsurf/arith.hpp"

#include <vector>

namespace bsurf {

using QMatrix = std::vector<std::vector<Rational>>;
using ZMatrix = std::vector<std::vector<Integer>>;

struct RowEchelon {
  QMatrix rows;             // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column per row
  int columns = 0;
  int rank() const { return static_cast<int>(pivots.size()); }
};

RowEchelon rref(QMatrix m, int columns);
QMatrix to_rational(const ZMatrix& m);
int rank(const ZMatrix& m, int columns);

// Basis of {x : m x = 0}, one vector per free column (free entry 1, other free entries 0).
QMatrix nullspace(const RowEchelon& e);

// Nonzero invariant factors of an integer matrix (Smith normal form diagonal).
std::vector<Integer> smith_invariants(ZMatrix m);

// Extreme rays of {x >= 0 : E x = 0, H x >= 0} by exact double description, as
// primitive integer vectors in lexicographically decreasing order.
std::vector<std::vector<Integer>> extreme_rays(int n, const ZMatrix& equalities, const ZMatrix& inequalities);

} // namespace bsurf
