#include "support.hpp"

#include "bsurf/carried.hpp"
#include "bsurf/documents.hpp"
#include "bsurf/euler.hpp"

#include <doctest.h>

using namespace bsurf;

namespace {

Rational r(const char* s) { return parse_rational(s); }

// X per sector straight from the formula, for comparison with the library.
Rational formula_x(const Sector& s) {
  if (s.kind == SectorKind::Closed) return Rational(2 - 2 * s.genus);
  Rational x = 1 - Rational(static_cast<long long>(s.sides.size()), 2);
  for (Angle a : s.corners) x += a == Angle::Right ? Rational(1, 4) : Rational(1, 2);
  return x;
}

DiscInstance instance(const std::string& name) { return load_instance(oracle::fixture_path("instances/" + name + ".json")); }

const char* const kWellFormed[] = {"Q1-disc-a", "Q1-disc-b", "Q1-annulus"};

} // namespace

TEST_CASE("euler_functional") {
  CHECK(euler_functional(oracle::fixture("T1")).coefficients == std::vector<Rational>{0});
  CHECK(euler_functional(oracle::fixture("G2")).coefficients == std::vector<Rational>{-2});
  CHECK(x_coefficient(2, 0, 0) == 0);
  CHECK(x_coefficient(4, 4, 0) == 0);
  for (const char* name : {"Y1", "Q1", "M1", "A1", "S1"}) {
    auto b = oracle::fixture(name);
    auto x = euler_functional(b);
    for (const auto& s : b.sectors) CHECK(x.coefficients[s.id] == formula_x(s));
  }
}

TEST_CASE("evaluate_X") {
  auto t = euler_functional(oracle::fixture("T1"));
  CHECK(evaluate_X(t, Weights{5}) == 0);
  auto g = euler_functional(oracle::fixture("G2"));
  CHECK(evaluate_X(g, Weights{3}) == -6);
  auto y1 = oracle::fixture("Y1");
  auto y = euler_functional(y1);
  CHECK(evaluate_X(y, Weights{1, 1, 2}) == reconstruct_surface(y1, {1, 1, 2}).total_chi());
  CHECK_THROWS_AS(evaluate_X(y, Weights{1, 1}), DomainError);
}

TEST_CASE("evaluate_X is linear") {
  auto b = oracle::fixture("Q1");
  auto x = euler_functional(b);
  std::vector<Rational> u{r("1/2"), r("1/3"), r("2")}, v{r("0"), r("5/7"), r("1/9")};
  for (const char* as : {"0", "1/2", "3"})
    for (const char* bs : {"0", "2/3", "1"}) {
      Rational a = r(as), c = r(bs);
      std::vector<Rational> w(3);
      for (int i = 0; i < 3; ++i) w[i] = a * u[i] + c * v[i];
      CHECK(evaluate_X(x, w) == a * evaluate_X(x, u) + c * evaluate_X(x, v));
    }
}

TEST_CASE("qh_certificate") {
  auto t = qh_certificate(oracle::fixture("T1"));
  CHECK_FALSE(t.verdict);
  CHECK(t.max_x == 0);
  auto g = qh_certificate(oracle::fixture("G2"));
  CHECK(g.verdict);
  CHECK(g.max_x == -2);
  CHECK(g.full_support);
  // Q1: P is the single point (1,2,3)/6 and X(1,2,3) = -2
  auto q = qh_certificate(oracle::fixture("Q1"));
  CHECK(q.verdict);
  CHECK(q.max_x == r("-1/3"));
  CHECK(q.min_x == r("-1/3"));
  CHECK_FALSE(qh_certificate(oracle::fixture("Y1")).verdict);
  CHECK_FALSE(qh_certificate(oracle::fixture("A1")).verdict);  // carries nothing fully
}

TEST_CASE("iso_constants") {
  auto g = iso_constants(oracle::fixture("G2"));
  CHECK(g.c0 == 2);
  CHECK(g.c1 == 1);
  CHECK(g.eps1 == 1);
  CHECK_THROWS_AS(iso_constants(oracle::fixture("T1")), DomainError);

  auto q1 = oracle::fixture("Q1");
  auto q = iso_constants(q1);
  CHECK_FALSE(audit_iso(q1, q).has_value());
  auto x = euler_functional(q1);
  for (const auto& v : q.audit) CHECK(evaluate_X(x, v) <= -q.c1);
  auto forged = q;
  forged.c1 = q.c1 * 4;
  CHECK(audit_iso(q1, forged).has_value());
}

TEST_CASE("check_isoperimetric case (a) verifies the whole chain") {
  auto b = oracle::fixture("Q1");
  auto cert = iso_constants(b);
  for (const char* name : {"Q1-disc-a", "Q1-annulus"}) {
    std::string label = name;
    CAPTURE(label);
    auto a = instance(name);
    auto rep = check_isoperimetric(b, a, cert);
    CHECK(rep.case_label == 'a');
    CHECK(rep.pass);
    // chain recomputed from the instance alone
    Rational area = static_cast<long long>(a.sheets.size());
    Rational length = static_cast<long long>(a.boundary.size());
    CHECK(rep.area == static_cast<long long>(a.sheets.size()));
    CHECK(rep.length == static_cast<long long>(a.boundary.size()));
    CHECK(cert.c1 * area <= length);
    CHECK(rep.l1 <= rep.l2);
    CHECK(rep.l2 == rep.l3);
    CHECK(rep.l3 <= rep.l4);
    CHECK(rep.l4 <= rep.l5);
    Rational tail = 0;
    for (auto [i, n] : a.corner_counts) {
      if (i == 1) tail += Rational(3 * n, 4);
      if (i == 2) tail += Rational(n, 2);
      if (i == 3) tail += Rational(n, 4);
    }
    CHECK(rep.l4 == tail);
  }
}

TEST_CASE("check_isoperimetric case (b)") {
  auto b = oracle::fixture("Q1");
  auto cert = iso_constants(b);
  auto rep = check_isoperimetric(b, instance("Q1-disc-b"), cert);
  CHECK(rep.case_label == 'b');
  CHECK(rep.pass);
  REQUIRE(rep.witness_edge);
  CHECK(Rational(rep.witness_traversals) >= cert.eps1 * rep.area);
  CHECK(Rational(rep.area) <= Rational(rep.length) / cert.eps1);
}

TEST_CASE("check_isoperimetric rejects a boundary edge off the branch locus") {
  auto b = oracle::fixture("Q1");
  CHECK_THROWS_AS(check_isoperimetric(b, instance("Q1-offlocus"), iso_constants(b)), DomainError);
}

TEST_CASE("check_isoperimetric rejects a certificate for a different complex") {
  auto b = oracle::fixture("Q1");
  auto cert = iso_constants(oracle::fixture("G2"));
  CHECK_THROWS_AS(check_isoperimetric(b, instance("Q1-disc-a"), cert), DomainError);
}

TEST_CASE("gauss_bonnet_defect") {
  auto b = oracle::fixture("Q1");
  for (const char* name : kWellFormed) {
    std::string label = name;
    CAPTURE(label);
    CHECK(gauss_bonnet_defect(b, instance(name)) == 0);
  }
  CHECK(analyze_instance(b, instance("Q1-annulus")).chi == 0);
  CHECK(gauss_bonnet_defect(b, instance("Q1-corrupt")) != 0);
}

TEST_CASE("qh verdict soundness on small solutions") {
  for (const char* name : {"G2", "Q1"}) {
    auto b = oracle::fixture(name);
    REQUIRE(qh_certificate(b).verdict);
    for (const auto& w : oracle::all_solutions(b, 6))
      for (const auto& c : reconstruct_surface(b, w).surface.components) CHECK(c.chi < 0);
  }
}
