#include "support.hpp"

#include "bsurf/carried.hpp"
#include "bsurf/euler.hpp"

#include <doctest.h>

#include <random>

using namespace bsurf;

namespace {

std::vector<Rational> q(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(parse_rational(x));
  return out;
}

} // namespace

TEST_CASE("branch_matrix rows") {
  auto y1 = branch_matrix(oracle::fixture("Y1"));
  REQUIRE(y1.rows.size() == 1);
  CHECK(y1.rows[0] == std::vector<long long>{1, 1, -1});
  CHECK(branch_matrix(oracle::fixture("T1")).rows.empty());

  for (const char* name : {"Q1", "M1", "A1", "S1"}) {
    auto b = oracle::fixture(name);
    auto m = branch_matrix(b);
    REQUIRE(m.rows.size() == b.edges.size());
    for (const auto& e : b.edges) {
      std::vector<long long> row(b.sector_count(), 0);
      ++row[e.slots[Top].sector];
      ++row[e.slots[Bottom].sector];
      --row[e.slots[Lower].sector];
      CHECK(m.rows[e.id] == row);
    }
  }
}

TEST_CASE("solution polytope vertices") {
  CHECK(solution_polytope_vertices(oracle::fixture("Y1")) == std::vector<std::vector<Rational>>{q({"1/2", "0", "1/2"}), q({"0", "1/2", "1/2"})});
  CHECK(solution_polytope_vertices(oracle::fixture("T1")) == std::vector<std::vector<Rational>>{q({"1"})});
}

TEST_CASE("polytope vertices satisfy the equations and brute force finds the same set") {
  for (const char* name : {"Y1", "Q1", "M1", "A1", "S1"}) {
    std::string label = name;
    CAPTURE(label);
    auto b = oracle::fixture(name);
    auto vs = solution_polytope_vertices(b);
    for (const auto& v : vs) {
      Rational sum = 0;
      for (const auto& x : v) sum += x;
      CHECK(sum == 1);
      Weights w = vertex_surface(v);
      CHECK(oracle::solves(b, w));
    }
    // an extreme ray's primitive vector is a Hilbert basis element, so every vertex
    // surface with small coordinates must show up among the brute-force basis
    auto hb = oracle::brute_hilbert(b, 6);
    for (const auto& v : vs) {
      Weights w = vertex_surface(v);
      if (*std::max_element(w.begin(), w.end()) <= 6) CHECK(std::find(hb.begin(), hb.end(), w) != hb.end());
    }
  }
}

TEST_CASE("vertex surfaces clear denominators minimally") {
  CHECK(vertex_surface(q({"1/2", "0", "1/2"})) == Weights{1, 0, 1});
  CHECK(vertex_surface(q({"1"})) == Weights{1});
  CHECK(vertex_surface(q({"1/3", "1/3", "1/3"})) == Weights{1, 1, 1});
  CHECK(vertex_surface(q({"1/6", "1/3", "1/2"})) == Weights{1, 2, 3});
}

TEST_CASE("fundamental surfaces") {
  auto y = fundamental_surfaces(oracle::fixture("Y1"), 3);
  CHECK(y.elements == std::vector<Weights>{{1, 0, 1}, {0, 1, 1}});
  CHECK(y.complete);
  auto t = fundamental_surfaces(oracle::fixture("T1"), 1);
  CHECK(t.elements == std::vector<Weights>{{1}});
  CHECK(t.complete);
  auto z = fundamental_surfaces(oracle::fixture("Y1"), 0);
  CHECK(z.elements.empty());
  CHECK_FALSE(z.complete);
}

TEST_CASE("fundamental surfaces agree with a brute-force Hilbert basis") {
  for (const char* name : {"T1", "G2", "Y1", "Q1", "M1", "A1", "S1"}) {
    std::string label = name;
    CAPTURE(label);
    auto b = oracle::fixture(name);
    auto fs = fundamental_surfaces(b, 6);
    auto brute = oracle::brute_hilbert(b, 6);
    std::sort(brute.begin(), brute.end(), [](const Weights& a, const Weights& c) { return lex_greater(a, c); });
    CHECK(fs.elements == brute);
    CHECK(fs.complete);
  }
}

TEST_CASE("every polytope vertex is indecomposable over the other fundamentals") {
  for (const char* name : {"Y1", "Q1", "M1", "S1"}) {
    auto b = oracle::fixture(name);
    auto fs = fundamental_surfaces(b, 6);
    for (const auto& v : vertex_surfaces(b)) {
      std::vector<Weights> rest;
      for (const auto& f : fs.elements)
        if (f != v) rest.push_back(f);
      CHECK_FALSE(oracle::decomposes(v, rest));
    }
  }
}

TEST_CASE("decompose") {
  auto y = oracle::fixture("Y1");
  auto fs = fundamental_surfaces(y, 3).elements;
  CHECK(decompose(y, {2, 3, 5}, fs) == std::vector<long long>{2, 3});
  CHECK_THROWS_WITH_AS(decompose(y, {1, 1, 1}, fs), doctest::Contains("edge 0"), DomainError);
  auto t = oracle::fixture("T1");
  CHECK(decompose(t, {4}, fundamental_surfaces(t, 1).elements) == std::vector<long long>{4});
}

TEST_CASE("decompose reproduces every small solution") {
  auto b = oracle::fixture("S1");
  auto fs = fundamental_surfaces(b, 6).elements;
  for (const auto& w : oracle::all_solutions(b, 4)) {
    auto c = decompose(b, w, fs);
    REQUIRE(c);
    Weights sum(w.size(), 0);
    for (size_t i = 0; i < fs.size(); ++i)
      for (size_t j = 0; j < w.size(); ++j) sum[j] += (*c)[i] * fs[i][j];
    CHECK(sum == w);
  }
}

TEST_CASE("cone closure") {
  std::mt19937 rng(3);
  for (const char* name : {"Y1", "Q1", "M1", "S1"}) {
    auto b = oracle::fixture(name);
    auto sols = integral_solutions(b, 4);
    REQUIRE_FALSE(sols.empty());
    for (int t = 0; t < 100; ++t) {
      const auto& u = sols[rng() % sols.size()];
      const auto& v = sols[rng() % sols.size()];
      long long a = rng() % 4, c = rng() % 4;
      Weights w(u.size());
      for (size_t i = 0; i < w.size(); ++i) w[i] = a * u[i] + c * v[i];
      CHECK(is_solution(b, w));
    }
  }
}

TEST_CASE("integral_solutions matches the odometer and is canonically ordered") {
  for (const char* name : {"T1", "Y1", "Q1", "M1"}) {
    auto b = oracle::fixture(name);
    auto lib = integral_solutions(b, 4);
    auto brute = oracle::all_solutions(b, 4);
    std::sort(brute.begin(), brute.end(), [](const Weights& a, const Weights& c) { return lex_greater(a, c); });
    CHECK(lib == brute);
    CHECK(integral_solutions(b, 4) == lib);
  }
}

TEST_CASE("reconstruct_surface") {
  auto t = reconstruct_surface(oracle::fixture("T1"), {2});
  REQUIRE(t.component_count() == 2);
  for (const auto& c : t.surface.components) {
    CHECK(c.chi == 0);
    CHECK(c.orientable);
  }
  auto g = reconstruct_surface(oracle::fixture("G2"), {3});
  REQUIRE(g.component_count() == 3);
  for (const auto& c : g.surface.components) CHECK(c.chi == -2);

  // Y1 with (1,1,2): two discs glued to two discs across the circle, two spheres
  auto y = reconstruct_surface(oracle::fixture("Y1"), {1, 1, 2});
  CHECK(y.component_count() == 2);
  CHECK(y.total_chi() == 4);
  for (const auto& c : y.surface.components) {
    CHECK(c.chi == 2);
    CHECK(c.boundary_circles == 0);
  }
}

TEST_CASE("reconstructed chi matches the cell count oracle and is additive") {
  for (const char* name : {"T1", "G2", "Y1", "Q1", "M1", "S1"}) {
    std::string label = name;
    CAPTURE(label);
    auto b = oracle::fixture(name);
    auto sols = integral_solutions(b, 3);
    for (const auto& w : sols) CHECK(reconstruct_surface(b, w).total_chi() == oracle::cell_count_chi(b, w));
    for (size_t i = 0; i < sols.size() && i < 12; ++i)
      for (size_t j = 0; j < sols.size() && j < 12; ++j) {
        Weights s(sols[i].size());
        for (size_t k = 0; k < s.size(); ++k) s[k] = sols[i][k] + sols[j][k];
        CHECK(reconstruct_surface(b, s).total_chi() == reconstruct_surface(b, sols[i]).total_chi() + reconstruct_surface(b, sols[j]).total_chi());
      }
  }
}

TEST_CASE("fully_carries") {
  CHECK_FALSE(fully_carries({1, 0, 1}));
  CHECK(fully_carries({1, 1, 2}));
  CHECK(fully_carries({1}));
}

TEST_CASE("in_P_eps") {
  auto y = oracle::fixture("Y1");
  CHECK(in_P_eps(y, q({"3/10", "2/10", "5/10"}), 0));
  CHECK(in_P_eps(y, q({"3/10", "2/10", "5/10"}), parse_rational("1/7")));
  CHECK_FALSE(in_P_eps(y, q({"1/3", "1/3", "1/3"}), parse_rational("1/4")));
  CHECK(in_P_eps(y, q({"1/3", "1/3", "1/3"}), parse_rational("1/3")));
}
