#include "bsurf/documents.hpp"

#include <sstream>

namespace bsurf {

DiscInstance instance_from_json(const Json& doc) {
  field::object(doc, "instance");
  field::only_keys(doc, "instance", {"name", "sheets", "gluings", "boundary", "corners"});
  DiscInstance a;
  if (doc.contains("name")) a.name = field::string(doc["name"], "name");
  const Json& sheets = field::array(field::require(doc, "instance", "sheets"), "sheets");
  for (std::size_t i = 0; i < sheets.size(); ++i) a.sheets.push_back(field::small_int(sheets[i], "sheets[" + std::to_string(i) + "]"));
  if (doc.contains("gluings")) {
    const Json& gl = field::array(doc["gluings"], "gluings");
    for (std::size_t i = 0; i < gl.size(); ++i) {
      std::string where = "gluings[" + std::to_string(i) + "]";
      const Json& g = field::array(gl[i], where);
      if (g.size() != 4) throw ParseError(where, "expected [sheet, side, sheet, side]");
      a.gluings.push_back({field::small_int(g[0], where + "[0]"), field::small_int(g[1], where + "[1]"), field::small_int(g[2], where + "[2]"),
                           field::small_int(g[3], where + "[3]")});
    }
  }
  const Json& bd = field::array(field::require(doc, "instance", "boundary"), "boundary");
  for (std::size_t i = 0; i < bd.size(); ++i) a.boundary.push_back(field::small_int(bd[i], "boundary[" + std::to_string(i) + "]"));
  const Json& corners = field::object(field::require(doc, "instance", "corners"), "corners");
  for (auto it = corners.begin(); it != corners.end(); ++it) {
    std::string where = "corners." + it.key();
    int i = 0;
    try {
      std::size_t used = 0;
      i = std::stoi(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError(where, "key must be an angle index 1, 2, 3, ... (multiples of pi/2)");
    }
    if (i < 1 || i > 7) throw ParseError(where, "angle index out of range");
    long long n = field::integer(it.value(), where);
    if (n < 0) throw ParseError(where, "count must be nonnegative");
    a.corner_counts[i] = n;
  }
  return a;
}

Json instance_to_json(const DiscInstance& a) {
  Json doc;
  doc["name"] = a.name;
  doc["sheets"] = a.sheets;
  Json gl = Json::array();
  for (const auto& g : a.gluings) gl.push_back({g.face_a, g.side_a, g.face_b, g.side_b});
  doc["gluings"] = gl;
  doc["boundary"] = a.boundary;
  Json c = Json::object();
  for (auto [i, n] : a.corner_counts) c[std::to_string(i)] = n;
  doc["corners"] = c;
  return doc;
}

DiscInstance load_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

std::vector<LoopCrossing> loop_from_json(const Json& doc) {
  field::object(doc, "loop");
  field::only_keys(doc, "loop", {"name", "crossings"});
  const Json& cr = field::array(field::require(doc, "loop", "crossings"), "crossings");
  std::vector<LoopCrossing> out;
  for (std::size_t i = 0; i < cr.size(); ++i) {
    std::string where = "crossings[" + std::to_string(i) + "]";
    field::object(cr[i], where);
    field::only_keys(cr[i], where, {"sector", "sign"});
    LoopCrossing c;
    c.sector = field::small_int(field::require(cr[i], where, "sector"), where + ".sector");
    c.sign = field::small_int(field::require(cr[i], where, "sign"), where + ".sign");
    if (c.sign != 1 && c.sign != -1) throw ParseError(where + ".sign", "must be 1 or -1");
    out.push_back(c);
  }
  return out;
}

std::vector<LoopCrossing> load_loop(const std::string& path) { return loop_from_json(read_json_file(path)); }

Json integer_json(const Integer& z) { return format_integer(z); }

Integer integer_from_json(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(v.get<long long>());
  if (!v.is_string()) throw ParseError(where, "expected an integer or a decimal string");
  try {
    return parse_integer(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  }
}

CeilingParams params_from_json(const Json& doc, CeilingParams p) {
  field::object(doc, "params");
  field::only_keys(doc, "params", {"r_max", "s0", "s1"});
  if (doc.contains("r_max")) p.r_max = integer_from_json(doc["r_max"], "r_max");
  if (doc.contains("s0")) p.s0 = integer_from_json(doc["s0"], "s0");
  if (doc.contains("s1")) p.s1 = integer_from_json(doc["s1"], "s1");
  for (auto [v, name] : {std::pair{&p.r_max, "r_max"}, {&p.s0, "s0"}, {&p.s1, "s1"}})
    if (*v < 0) throw ParseError(name, "must be nonnegative");
  return p;
}

Json params_to_json(const CeilingParams& p) {
  return Json{{"r_max", integer_json(p.r_max)}, {"s0", integer_json(p.s0)}, {"s1", integer_json(p.s1)}};
}

Weights parse_weights(const std::string& text) {
  Weights w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t");
    item = first == std::string::npos ? "" : item.substr(first, last - first + 1);
    try {
      std::size_t used = 0;
      long long x = std::stoll(item, &used);
      if (used != item.size() || x < 0) throw std::invalid_argument("");
      w.push_back(x);
    } catch (const std::exception&) {
      throw ParseError("--weights", "expected comma-separated nonnegative integers, got \"" + item + "\"");
    }
  }
  if (w.empty()) throw ParseError("--weights", "empty weight vector");
  return w;
}

Json weights_json(const Weights& w) {
  Json a = Json::array();
  for (long long x : w) a.push_back(std::to_string(x));
  return a;
}

Weights weights_from_json(const Json& v, const std::string& where) {
  Weights w;
  const Json& a = field::array(v, where);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer z = integer_from_json(a[i], where + "[" + std::to_string(i) + "]");
    w.push_back(z.convert_to<long long>());
  }
  return w;
}

Json iso_to_json(const IsoCertificate& c) {
  Json audit = Json::array();
  for (const auto& v : c.audit) audit.push_back(rational_vector_json(v));
  return Json{{"C0", rational_json(c.c0)},
              {"C1", rational_json(c.c1)},
              {"eps1", rational_json(c.eps1)},
              {"max_x_relaxed", rational_json(c.max_x_relaxed)},
              {"audit", audit}};
}

IsoCertificate iso_from_json(const Json& payload) {
  field::object(payload, "payload");
  IsoCertificate c;
  c.c0 = field::rational(field::require(payload, "payload", "C0"), "payload.C0");
  c.c1 = field::rational(field::require(payload, "payload", "C1"), "payload.C1");
  c.eps1 = field::rational(field::require(payload, "payload", "eps1"), "payload.eps1");
  if (payload.contains("max_x_relaxed")) c.max_x_relaxed = field::rational(payload["max_x_relaxed"], "payload.max_x_relaxed");
  const Json& audit = field::array(field::require(payload, "payload", "audit"), "payload.audit");
  for (std::size_t i = 0; i < audit.size(); ++i) {
    std::string where = "payload.audit[" + std::to_string(i) + "]";
    std::vector<Rational> v;
    const Json& row = field::array(audit[i], where);
    for (std::size_t j = 0; j < row.size(); ++j) v.push_back(field::rational(row[j], where + "[" + std::to_string(j) + "]"));
    c.audit.push_back(std::move(v));
  }
  return c;
}

} // namespace bsurf
