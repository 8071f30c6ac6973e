#pragma once

// Shared helpers for the test binaries. The oracles here are written against the
// raw complex data and deliberately avoid the library's own algorithms.

#include "bsurf/io.hpp"
#include "bsurf/solution.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#ifndef BSURF_SOURCE_DIR
#error "BSURF_SOURCE_DIR must be defined"
#endif

namespace oracle {

using bsurf::BranchedSurface;
using bsurf::Weights;

inline std::string fixture_path(const std::string& rel) { return std::string(BSURF_SOURCE_DIR) + "/fixtures/" + rel; }

inline BranchedSurface fixture(const std::string& name) { return bsurf::load_complex(fixture_path(name + ".bsurf.json")); }

// x_top + x_bottom == x_lower at every edge, read straight off the slots.
inline bool solves(const BranchedSurface& b, const Weights& w) {
  for (const auto& e : b.edges)
    if (w[e.slots[0].sector] + w[e.slots[1].sector] != w[e.slots[2].sector]) return false;
  return true;
}

// Every nonzero solution with coordinates in [0, max], by odometer.
inline std::vector<Weights> all_solutions(const BranchedSurface& b, long long max) {
  std::vector<Weights> out;
  int n = b.sector_count();
  Weights w(n, 0);
  while (true) {
    int i = 0;
    while (i < n && w[i] == max) w[i++] = 0;
    if (i == n) break;
    ++w[i];
    if (solves(b, w)) out.push_back(w);
  }
  return out;
}

// Total Euler characteristic of the surface carried with weights w, by counting
// cells of the carried cell structure: one face per sheet, w_lower arcs (or circles)
// over each branch edge, and over each vertex as many points as the heaviest
// sector at that vertex. Closed sectors contribute w (2 - 2g) directly.
inline long long cell_count_chi(const BranchedSurface& b, const Weights& w) {
  long long chi = 0;
  for (const auto& s : b.sectors) {
    if (s.kind == bsurf::SectorKind::Closed) chi += w[s.id] * (2 - 2 * s.genus);
    else chi += w[s.id];
  }
  for (const auto& e : b.edges) {
    long long arcs = w[e.slots[2].sector];
    chi -= arcs;
    if (e.endpoints.empty()) chi += arcs;  // one basepoint per circle
  }
  for (const auto& v : b.vertices) {
    long long top = 0;
    for (const auto& c : v.corners) top = std::max(top, w[c.sector]);
    chi += top;
  }
  return chi;
}

// Whether w is a nonnegative integral combination of basis, by memoized search.
inline bool decomposes(const Weights& w, const std::vector<Weights>& basis) {
  std::map<Weights, bool> memo;
  std::function<bool(const Weights&)> go = [&](const Weights& x) {
    if (std::all_of(x.begin(), x.end(), [](long long v) { return v == 0; })) return true;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& f : basis) {
      Weights y = x;
      bool fits = true;
      for (size_t i = 0; i < y.size() && fits; ++i) {
        y[i] -= f[i];
        fits = y[i] >= 0;
      }
      if (fits && go(y)) {
        ok = true;
        break;
      }
    }
    memo[x] = ok;
    return ok;
  };
  return go(w);
}

// Hilbert basis of the solutions with coordinates <= max: solutions that are not
// the sum of two nonzero solutions.
inline std::vector<Weights> brute_hilbert(const BranchedSurface& b, long long max) {
  auto sols = all_solutions(b, max);
  std::vector<Weights> out;
  for (const auto& w : sols) {
    bool reducible = false;
    for (const auto& u : sols) {
      if (u == w) continue;
      Weights d = w;
      bool ok = true;
      for (size_t i = 0; i < d.size() && ok; ++i) {
        d[i] -= u[i];
        ok = d[i] >= 0;
      }
      if (ok && solves(b, d)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(w);
  }
  return out;
}

inline Weights matrix_times(const std::vector<std::vector<long long>>& m, const Weights& y) {
  Weights out(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j) out[i] += m[i][j] * y[j];
  return out;
}

} // namespace oracle
