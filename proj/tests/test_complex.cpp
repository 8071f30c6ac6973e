#include "support.hpp"

#include "bsurf/complex.hpp"

#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace bsurf;

namespace {

bool has_kind(const ValidationReport& r, ViolationKind k) {
  for (const auto& v : r.violations)
    if (v.kind == k) return true;
  return false;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* const kFixtures[] = {"T1", "G2", "Y1", "Q1", "M1", "A1", "S1"};

} // namespace

TEST_CASE("validate: fixtures are well formed") {
  for (const char* name : kFixtures) {
    std::string label = name;
    CAPTURE(label);
    CHECK(validate(oracle::fixture(name)).ok());
  }
}

TEST_CASE("validate: dangling sector reference") {
  auto b = oracle::fixture("Y1");
  b.edges[0].slots[Lower].sector = 9;
  auto r = validate(b);
  CHECK_FALSE(r.ok());
  CHECK(has_kind(r, ViolationKind::DanglingReference));
}

TEST_CASE("validate: vertex with five corners breaks the local model") {
  auto b = oracle::fixture("Q1");
  b.vertices[0].corners.pop_back();
  CHECK(has_kind(validate(b), ViolationKind::LocalModel));
}

TEST_CASE("validate: inconsistent orientation is reported") {
  auto b = oracle::fixture("Y1");
  auto signs = transverse_orientation(b);
  REQUIRE(signs);
  auto bad = *signs;
  bad[2] = -bad[2];
  b.orientation = bad;
  CHECK(has_kind(validate(b), ViolationKind::Orientation));
}

TEST_CASE("validate is idempotent") {
  for (const char* name : kFixtures) {
    auto b = oracle::fixture(name);
    CHECK(validate(b).summary() == validate(b).summary());
  }
}

TEST_CASE("validate never throws on randomly corrupted references") {
  std::mt19937 rng(7);
  for (const char* name : kFixtures) {
    auto base = oracle::fixture(name);
    for (int trial = 0; trial < 200; ++trial) {
      auto b = base;
      std::uniform_int_distribution<int> val(-2, 12);
      if (!b.edges.empty()) {
        auto& e = b.edges[rng() % b.edges.size()];
        auto& s = e.slots[rng() % 3];
        if (rng() % 2) s.sector = val(rng);
        else s.side = val(rng);
        if (!e.endpoints.empty() && rng() % 2) e.endpoints[rng() % e.endpoints.size()] = val(rng);
      }
      if (!b.vertices.empty() && rng() % 2) {
        auto& c = b.vertices[rng() % b.vertices.size()].corners;
        if (!c.empty()) c[rng() % c.size()].corner = val(rng);
      }
      for (auto& s : b.sectors)
        for (auto& side : s.sides)
          if (rng() % 8 == 0) side.edge = val(rng);
      CHECK_NOTHROW(validate(b));
    }
  }
}

TEST_CASE("orientation check accepts exactly the consistent sign vectors") {
  for (const char* name : kFixtures) {
    auto b = oracle::fixture(name);
    int n = b.sector_count();
    REQUIRE(n <= 6);
    // independent rule: at every edge the upper slots agree with the lower one,
    // where a flipped slot reverses the sector's sign
    auto consistent = [&](const std::vector<int>& sg) {
      for (const auto& e : b.edges) {
        auto eff = [&](const SlotRef& r) { return r.flip ? -sg[r.sector] : sg[r.sector]; };
        if (eff(e.top()) != eff(e.lower()) || eff(e.bottom()) != eff(e.lower())) return false;
      }
      return true;
    };
    int found = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> sg(n);
      for (int i = 0; i < n; ++i) sg[i] = (mask >> i & 1) ? -1 : 1;
      bool ok = orientation_consistent(b, sg);
      CHECK(ok == consistent(sg));
      if (ok) {
        ++found;
        // flipping a single sector must break some edge unless the sector is isolated
        for (int i = 0; i < n; ++i) {
          auto t = sg;
          t[i] = -t[i];
          bool touches = false;
          for (const auto& e : b.edges)
            for (const auto& s : e.slots) touches |= s.sector == i;
          if (touches) CHECK_FALSE(orientation_consistent(b, t));
        }
      }
    }
    std::string label = name;
    CAPTURE(label);
    CHECK((found > 0) == transverse_orientation(b).has_value());
  }
}

TEST_CASE("M1 is not transversely orientable") { CHECK_FALSE(transverse_orientation(oracle::fixture("M1")).has_value()); }

TEST_CASE("build_cellulation counts") {
  auto t1 = build_cellulation(oracle::fixture("T1"));
  CHECK(t1.vertex_count == 0);
  CHECK(t1.edge_count == 0);
  CHECK(t1.face_count == 1);
  auto y1 = build_cellulation(oracle::fixture("Y1"));
  CHECK(y1.face_count == 3);
  CHECK(y1.edge_count == 1);
  CHECK(y1.circle_count == 1);
  CHECK(y1.vertex_count == 0);
  auto g2 = build_cellulation(oracle::fixture("G2"));
  CHECK(g2.vertex_count == 0);
  CHECK(g2.edge_count == 0);
  CHECK(g2.face_count == 1);
  auto q1 = build_cellulation(oracle::fixture("Q1"));
  CHECK(q1.vertex_count == 4);
  CHECK(q1.edge_count == 8);
  CHECK(q1.face_count == 3);
}

TEST_CASE("build_cellulation rejects invalid input") {
  auto b = oracle::fixture("Y1");
  b.edges[0].slots[Lower].sector = 9;
  CHECK_THROWS_AS(build_cellulation(b), InvalidComplex);
}

TEST_CASE("canonical documents round-trip byte for byte") {
  for (const char* name : kFixtures) {
    std::string label = name;
    CAPTURE(label);
    std::string path = oracle::fixture_path(std::string(name) + ".bsurf.json");
    std::string text = slurp(path);
    CHECK(canonical_text(complex_to_json(load_complex(path))) == text);
  }
}

TEST_CASE("parser errors name the field") {
  auto doc = read_json_file(oracle::fixture_path("Q1.bsurf.json"));
  doc["sectors"][2]["corners"][0] = "pi/3";
  try {
    complex_from_json(doc);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.field() == "sectors[2].corners[0]");
  }
  CHECK_THROWS_AS(parse_json_text("{\"name\": ", "truncated"), ParseError);
  auto extra = read_json_file(oracle::fixture_path("T1.bsurf.json"));
  extra["colour"] = 1;
  CHECK_THROWS_AS(complex_from_json(extra), ParseError);
}
