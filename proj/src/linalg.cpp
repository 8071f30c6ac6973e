#include "bsurf/linalg.hpp"

#include <algorithm>
#include <set>

namespace bsurf {

RowEchelon rref(QMatrix m, int columns) {
  RowEchelon out;
  out.columns = columns;
  int r = 0;
  int rows = static_cast<int>(m.size());
  for (int c = 0; c < columns && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Rational inv = 1 / m[r][c];
    for (int j = c; j < columns; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = c; j < columns; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

QMatrix to_rational(const ZMatrix& m) {
  QMatrix q;
  q.reserve(m.size());
  for (const auto& row : m) {
    std::vector<Rational> r;
    r.reserve(row.size());
    for (const auto& x : row) r.emplace_back(x);
    q.push_back(std::move(r));
  }
  return q;
}

int rank(const ZMatrix& m, int columns) { return rref(to_rational(m), columns).rank(); }

QMatrix nullspace(const RowEchelon& e) {
  std::vector<bool> is_pivot(e.columns, false);
  for (int p : e.pivots) is_pivot[p] = true;
  QMatrix basis;
  for (int f = 0; f < e.columns; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(e.columns, Rational(0));
    v[f] = 1;
    for (int i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Integer> smith_invariants(ZMatrix m) {
  std::vector<Integer> diag;
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry in the remaining block as pivot
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pi < 0 || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(m[t], m[pi]);
    for (auto& row : m) std::swap(row[t], row[pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Integer q = m[i][t] / m[t][t];
        for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Integer q = m[t][j] / m[t][t];
        for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // divisibility: fold any entry not divisible by the pivot into row t
        for (int i = t + 1; i < rows && clean; ++i)
          for (int j = t + 1; j < cols && clean; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (int k = t; k < cols; ++k) m[t][k] += m[i][k];
              clean = false;
            }
      }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

namespace {

struct Ray {
  std::vector<Integer> v;
  std::vector<bool> zero;  // per processed constraint
};

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

// One double-description step against h.x = 0 (equality) or h.x >= 0.
std::vector<Ray> dd_step(const std::vector<Ray>& rays, const std::vector<Integer>& h, bool equality,
                         const std::vector<std::vector<Integer>>& constraints) {
  std::vector<Integer> val(rays.size());
  std::vector<int> pos, neg;
  std::vector<Ray> out;
  for (std::size_t r = 0; r < rays.size(); ++r) {
    val[r] = dot(h, rays[r].v);
    if (val[r] > 0) pos.push_back(static_cast<int>(r));
    else if (val[r] < 0) neg.push_back(static_cast<int>(r));
  }
  for (std::size_t r = 0; r < rays.size(); ++r) {
    if (val[r] == 0 || (!equality && val[r] > 0)) {
      Ray x = rays[r];
      x.zero.push_back(val[r] == 0);
      out.push_back(std::move(x));
    }
  }
  for (int p : pos) {
    for (int q : neg) {
      std::vector<bool> common(rays[p].zero.size());
      for (std::size_t i = 0; i < common.size(); ++i) common[i] = rays[p].zero[i] && rays[q].zero[i];
      bool adjacent = true;
      for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
        if (static_cast<int>(r) == p || static_cast<int>(r) == q) continue;
        if (subset(common, rays[r].zero)) adjacent = false;
      }
      if (!adjacent) continue;
      Ray x;
      x.v.resize(h.size());
      Integer a = val[p], b = -val[q];
      for (std::size_t i = 0; i < h.size(); ++i) x.v[i] = a * rays[q].v[i] + b * rays[p].v[i];
      make_primitive(x.v);
      x.zero.resize(constraints.size());
      for (std::size_t c = 0; c < constraints.size(); ++c) x.zero[c] = dot(constraints[c], x.v) == 0;
      x.zero.push_back(true);
      out.push_back(std::move(x));
    }
  }
  return out;
}

} // namespace

std::vector<std::vector<Integer>> extreme_rays(int n, const ZMatrix& equalities, const ZMatrix& inequalities) {
  std::vector<std::vector<Integer>> constraints;  // processed ones, zero-set bits refer to these
  std::vector<Ray> rays;
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> e(n, Integer(0));
    e[i] = 1;
    constraints.push_back(e);
  }
  for (int i = 0; i < n; ++i) {
    Ray r;
    r.v.assign(n, Integer(0));
    r.v[i] = 1;
    r.zero.assign(n, true);
    r.zero[i] = false;
    rays.push_back(std::move(r));
  }
  auto process = [&](const std::vector<Integer>& h, bool equality) {
    bool trivial = std::all_of(h.begin(), h.end(), [](const Integer& x) { return x == 0; });
    if (trivial) return;
    rays = dd_step(rays, h, equality, constraints);
    constraints.push_back(h);
  };
  for (const auto& row : equalities) process(row, true);
  for (const auto& row : inequalities) process(row, false);
  std::set<std::vector<Integer>> uniq;
  for (auto& r : rays) uniq.insert(r.v);
  std::vector<std::vector<Integer>> out(uniq.rbegin(), uniq.rend());
  return out;
}

} // namespace bsurf
