#include "bsurf/solution.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace bsurf {

ZMatrix BranchMatrix::as_integer() const {
  ZMatrix m;
  for (const auto& row : rows) {
    std::vector<Integer> r;
    for (long long x : row) r.emplace_back(x);
    m.push_back(std::move(r));
  }
  return m;
}

BranchMatrix branch_matrix(const BranchedSurface& b) {
  require_valid(b);
  BranchMatrix m;
  m.columns = b.sector_count();
  for (const BranchEdge& e : b.edges) {
    std::vector<long long> row(m.columns, 0);
    row[e.top().sector] += 1;
    row[e.bottom().sector] += 1;
    row[e.lower().sector] -= 1;
    m.rows.push_back(std::move(row));
  }
  return m;
}

std::optional<int> violated_edge(const BranchedSurface& b, const Weights& w) {
  for (const BranchEdge& e : b.edges)
    if (w[e.top().sector] + w[e.bottom().sector] != w[e.lower().sector]) return e.id;
  return std::nullopt;
}

bool is_solution(const BranchedSurface& b, const Weights& w) {
  if (static_cast<int>(w.size()) != b.sector_count()) return false;
  for (long long x : w)
    if (x < 0) return false;
  return !violated_edge(b, w);
}

void require_solution(const BranchedSurface& b, const Weights& w) {
  if (static_cast<int>(w.size()) != b.sector_count())
    throw DomainError("weight vector has " + std::to_string(w.size()) + " entries, complex has " + std::to_string(b.sector_count()) + " sectors");
  for (long long x : w)
    if (x < 0) throw DomainError("weights must be nonnegative");
  if (auto e = violated_edge(b, w)) throw DomainError("not a solution: violates edge " + std::to_string(*e));
}

bool lex_greater(const Weights& a, const Weights& b) { return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end()); }

namespace {

std::vector<std::vector<Rational>> normalize_rays(const std::vector<std::vector<Integer>>& rays) {
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rays) {
    Integer s = 0;
    for (const auto& x : r) s += x;
    if (s == 0) continue;
    std::vector<Rational> v;
    for (const auto& x : r) v.emplace_back(x, s);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  });
  return out;
}

} // namespace

std::vector<std::vector<Rational>> solution_polytope_vertices(const BranchedSurface& b) {
  BranchMatrix a = branch_matrix(b);
  return normalize_rays(extreme_rays(a.columns, a.as_integer(), {}));
}

std::vector<std::vector<Rational>> relaxed_polytope_vertices(const BranchedSurface& b, const Rational& eps) {
  BranchMatrix a = branch_matrix(b);
  // eps * sum(x) - a.x >= 0 and eps * sum(x) + a.x >= 0, scaled by the denominator of eps
  Integer p = numerator_of(eps), q = denominator_of(eps);
  ZMatrix ineq;
  for (const auto& row : a.rows) {
    std::vector<Integer> lo(a.columns), hi(a.columns);
    for (int i = 0; i < a.columns; ++i) {
      lo[i] = p - q * row[i];
      hi[i] = p + q * row[i];
    }
    ineq.push_back(std::move(lo));
    ineq.push_back(std::move(hi));
  }
  return normalize_rays(extreme_rays(a.columns, {}, ineq));
}

Weights vertex_surface(const std::vector<Rational>& vertex) {
  std::vector<Integer> z = clear_denominators(vertex);
  Weights w;
  for (const auto& x : z) w.push_back(x.convert_to<long long>());
  return w;
}

std::vector<Weights> vertex_surfaces(const BranchedSurface& b) {
  std::vector<Weights> out;
  for (const auto& v : solution_polytope_vertices(b)) out.push_back(vertex_surface(v));
  return out;
}

Integer hilbert_coordinate_bound(const BranchedSurface& b) {
  BranchMatrix a = branch_matrix(b);
  auto rays = extreme_rays(a.columns, a.as_integer(), {});
  int rk = rank(a.as_integer(), a.columns);
  std::size_t d = std::min<std::size_t>(rays.size(), static_cast<std::size_t>(a.columns - rk));
  Integer best = 0;
  for (int c = 0; c < a.columns; ++c) {
    std::vector<Integer> col;
    for (const auto& r : rays) col.push_back(r[c]);
    std::sort(col.begin(), col.end(), std::greater<>());
    Integer s = 0;
    for (std::size_t i = 0; i < d && i < col.size(); ++i) s += col[i];
    best = std::max(best, s);
  }
  return best;
}

namespace {

// Integral points of {x >= 0, Ax = 0} with coordinates <= bound, by enumerating the
// free columns of the reduced echelon form and solving for the pivots.
template <class Visit>
void for_each_bounded_solution(const BranchedSurface& b, long long bound, Visit visit) {
  BranchMatrix a = branch_matrix(b);
  int n = a.columns;
  if (n == 0 || bound < 0) return;
  RowEchelon e = rref(to_rational(a.as_integer()), n);
  std::vector<bool> is_pivot(n, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  // pivot p: den * x_p = -sum coef_f * x_f
  struct PivotRow {
    int col;
    long long den;
    std::vector<long long> coef;  // per free column
  };
  std::vector<PivotRow> prow;
  for (int i = 0; i < e.rank(); ++i) {
    Integer l = 1;
    for (int f : free_cols) l = lcm(l, denominator_of(e.rows[i][f]));
    PivotRow pr{e.pivots[i], l.convert_to<long long>(), {}};
    for (int f : free_cols) {
      Rational c = -e.rows[i][f] * Rational(l);
      pr.coef.push_back(numerator_of(c).convert_to<long long>());
    }
    prow.push_back(std::move(pr));
  }
  std::vector<long long> fv(free_cols.size(), 0);
  Weights x(n, 0);
  while (true) {
    bool ok = true;
    for (const auto& pr : prow) {
      long long s = 0;
      for (std::size_t k = 0; k < fv.size(); ++k) s += pr.coef[k] * fv[k];
      if (s < 0 || s % pr.den != 0 || s / pr.den > bound) {
        ok = false;
        break;
      }
      x[pr.col] = s / pr.den;
    }
    if (ok) {
      for (std::size_t k = 0; k < fv.size(); ++k) x[free_cols[k]] = fv[k];
      visit(x);
    }
    std::size_t k = 0;
    while (k < fv.size() && fv[k] == bound) fv[k++] = 0;
    if (k == fv.size()) break;
    ++fv[k];
  }
}

} // namespace

std::vector<Weights> integral_solutions(const BranchedSurface& b, long long max_coord) {
  std::vector<Weights> out;
  for_each_bounded_solution(b, max_coord, [&](const Weights& x) {
    if (std::any_of(x.begin(), x.end(), [](long long v) { return v != 0; })) out.push_back(x);
  });
  std::sort(out.begin(), out.end(), lex_greater);
  return out;
}

FundamentalSet fundamental_surfaces(const BranchedSurface& b, long long coordinate_bound) {
  FundamentalSet fs;
  fs.coordinate_bound = coordinate_bound;
  fs.completeness_bound = hilbert_coordinate_bound(b);
  fs.complete = Integer(coordinate_bound) >= fs.completeness_bound;
  std::vector<Weights> sols = integral_solutions(b, coordinate_bound);
  auto sum = [](const Weights& w) { return std::accumulate(w.begin(), w.end(), 0LL); };
  std::stable_sort(sols.begin(), sols.end(), [&](const Weights& p, const Weights& q) { return sum(p) < sum(q); });
  for (const Weights& x : sols) {
    bool reducible = false;
    for (const Weights& h : fs.elements) {
      bool le = true;
      for (std::size_t i = 0; i < x.size() && le; ++i) le = h[i] <= x[i];
      if (le) {
        reducible = true;
        break;
      }
    }
    if (!reducible) fs.elements.push_back(x);
  }
  std::sort(fs.elements.begin(), fs.elements.end(), lex_greater);
  return fs;
}

std::optional<std::vector<long long>> decompose(const BranchedSurface& b, const Weights& w, const std::vector<Weights>& fundamentals) {
  require_solution(b, w);
  std::size_t k = fundamentals.size(), n = w.size();
  for (const auto& f : fundamentals)
    if (f.size() != n) throw DomainError("fundamental surface has the wrong length");
  // coordinates still reachable by elements idx.. onward
  std::vector<std::vector<bool>> reach(k + 1, std::vector<bool>(n, false));
  for (std::size_t i = k; i-- > 0;)
    for (std::size_t c = 0; c < n; ++c) reach[i][c] = reach[i + 1][c] || fundamentals[i][c] > 0;
  std::vector<long long> coef(k, 0);
  std::set<std::pair<std::size_t, Weights>> dead;
  Weights rest = w;
  auto search = [&](auto&& self, std::size_t idx) -> bool {
    bool zero = std::all_of(rest.begin(), rest.end(), [](long long v) { return v == 0; });
    if (idx == k) return zero;
    for (std::size_t c = 0; c < n; ++c)
      if (rest[c] > 0 && !reach[idx][c]) return false;
    if (dead.count({idx, rest})) return false;
    const Weights& f = fundamentals[idx];
    long long top = -1;
    for (std::size_t c = 0; c < n; ++c)
      if (f[c] > 0) top = top < 0 ? rest[c] / f[c] : std::min(top, rest[c] / f[c]);
    if (top < 0) top = 0;  // zero vector: only coefficient 0 matters
    for (long long t = 0; t <= top; ++t) {
      coef[idx] = t;
      for (std::size_t c = 0; c < n; ++c) rest[c] -= t * f[c];
      bool found = self(self, idx + 1);
      for (std::size_t c = 0; c < n; ++c) rest[c] += t * f[c];
      if (found) return true;
    }
    coef[idx] = 0;
    dead.insert({idx, rest});
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return coef;
}

bool fully_carries(const Weights& w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](long long v) { return v > 0; });
}

bool in_P_eps(const BranchedSurface& b, const std::vector<Rational>& x, const Rational& eps) {
  if (static_cast<int>(x.size()) != b.sector_count()) throw DomainError("point has the wrong dimension");
  Rational s = 0;
  for (const auto& v : x) {
    if (v < 0) throw DomainError("point is not in the simplex: negative entry");
    s += v;
  }
  if (s != 1) throw DomainError("point is not in the simplex: entries sum to " + format_rational(s));
  for (const BranchEdge& e : b.edges) {
    Rational r = x[e.top().sector] + x[e.bottom().sector] - x[e.lower().sector];
    if (abs(r) > eps) return false;
  }
  return true;
}

} // namespace bsurf
