#include "bsurf/io.hpp"

#include <fstream>
#include <sstream>

namespace bsurf {

namespace field {

void only_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw ParseError(where.empty() ? it.key() : where + "." + it.key(), "unknown key");
  }
}

const Json& require(const Json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

long long integer(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where, "expected an integer");
  return v.get<long long>();
}

int small_int(const Json& v, const std::string& where) {
  long long x = integer(v, where);
  if (x < -(1LL << 30) || x > (1LL << 30)) throw ParseError(where, "integer out of range");
  return static_cast<int>(x);
}

Rational rational(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) throw ParseError(where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  }
}

std::string string(const Json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where, "expected a string");
  return v.get<std::string>();
}

const Json& array(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where, "expected an array");
  return v;
}

const Json& object(const Json& v, const std::string& where) {
  if (!v.is_object()) throw ParseError(where, "expected an object");
  return v;
}

} // namespace field

namespace {

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

Angle parse_angle(const Json& v, const std::string& where) {
  std::string s = field::string(v, where);
  if (s == "pi/2") return Angle::Right;
  if (s == "pi") return Angle::Straight;
  throw ParseError(where, "angle must be \"pi/2\" or \"pi\", got \"" + s + "\"");
}

const char* angle_text(Angle a) { return a == Angle::Right ? "pi/2" : "pi"; }

SlotRef parse_slot(const Json& v, const std::string& where) {
  field::object(v, where);
  field::only_keys(v, where, {"sector", "side", "flip"});
  SlotRef r;
  r.sector = field::small_int(field::require(v, where, "sector"), where + ".sector");
  r.side = field::small_int(field::require(v, where, "side"), where + ".side");
  if (auto it = v.find("flip"); it != v.end()) {
    if (!it->is_boolean()) throw ParseError(where + ".flip", "expected a boolean");
    r.flip = it->get<bool>();
  }
  return r;
}

Json slot_json(const SlotRef& r) {
  Json j;
  j["sector"] = r.sector;
  j["side"] = r.side;
  if (r.flip) j["flip"] = true;
  return j;
}

} // namespace

BranchedSurface complex_from_json(const Json& doc) {
  field::object(doc, "");
  field::only_keys(doc, "", {"name", "sectors", "edges", "vertices", "orientation", "geometry"});
  BranchedSurface b;
  b.name = field::string(field::require(doc, "", "name"), "name");

  const Json& sectors = field::array(field::require(doc, "", "sectors"), "sectors");
  for (std::size_t i = 0; i < sectors.size(); ++i) {
    std::string w = at("sectors", i);
    const Json& s = field::object(sectors[i], w);
    field::only_keys(s, w, {"id", "kind", "genus", "sides", "corners"});
    Sector sec;
    sec.id = field::small_int(field::require(s, w, "id"), w + ".id");
    std::string kind = field::string(field::require(s, w, "kind"), w + ".kind");
    if (kind == "disc") sec.kind = SectorKind::Disc;
    else if (kind == "closed") sec.kind = SectorKind::Closed;
    else throw ParseError(w + ".kind", "must be \"disc\" or \"closed\"");
    if (auto it = s.find("genus"); it != s.end()) {
      if (sec.kind != SectorKind::Closed) throw ParseError(w + ".genus", "only closed sectors have a genus");
      sec.genus = field::small_int(*it, w + ".genus");
      if (sec.genus < 0) throw ParseError(w + ".genus", "must be nonnegative");
    }
    if (auto it = s.find("sides"); it != s.end()) {
      field::array(*it, w + ".sides");
      for (std::size_t m = 0; m < it->size(); ++m) {
        std::string ws = at(w + ".sides", m);
        const Json& sd = field::object((*it)[m], ws);
        field::only_keys(sd, ws, {"edge", "dir"});
        Side side;
        side.edge = field::small_int(field::require(sd, ws, "edge"), ws + ".edge");
        side.dir = field::small_int(field::require(sd, ws, "dir"), ws + ".dir");
        if (side.dir != 1 && side.dir != -1) throw ParseError(ws + ".dir", "must be 1 or -1");
        sec.sides.push_back(side);
      }
    } else if (sec.kind == SectorKind::Disc) {
      throw ParseError(w + ".sides", "missing");
    }
    if (auto it = s.find("corners"); it != s.end()) {
      field::array(*it, w + ".corners");
      for (std::size_t m = 0; m < it->size(); ++m) sec.corners.push_back(parse_angle((*it)[m], at(w + ".corners", m)));
    } else if (sec.kind == SectorKind::Disc) {
      throw ParseError(w + ".corners", "missing");
    }
    b.sectors.push_back(std::move(sec));
  }

  const Json& edges = field::array(field::require(doc, "", "edges"), "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string w = at("edges", i);
    const Json& e = field::object(edges[i], w);
    field::only_keys(e, w, {"id", "upper", "lower", "endpoints", "length"});
    BranchEdge edge;
    edge.id = field::small_int(field::require(e, w, "id"), w + ".id");
    const Json& up = field::array(field::require(e, w, "upper"), w + ".upper");
    if (up.size() != 2) throw ParseError(w + ".upper", "must list exactly two sides");
    edge.slots[Top] = parse_slot(up[0], w + ".upper[0]");
    edge.slots[Bottom] = parse_slot(up[1], w + ".upper[1]");
    edge.slots[Lower] = parse_slot(field::require(e, w, "lower"), w + ".lower");
    if (auto it = e.find("endpoints"); it != e.end()) {
      field::array(*it, w + ".endpoints");
      for (std::size_t k = 0; k < it->size(); ++k) edge.endpoints.push_back(field::small_int((*it)[k], at(w + ".endpoints", k)));
    }
    if (auto it = e.find("length"); it != e.end()) {
      edge.length = field::rational(*it, w + ".length");
      if (edge.length <= 0) throw ParseError(w + ".length", "must be positive");
    }
    b.edges.push_back(std::move(edge));
  }

  const Json& verts = field::array(field::require(doc, "", "vertices"), "vertices");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    std::string w = at("vertices", i);
    const Json& v = field::object(verts[i], w);
    field::only_keys(v, w, {"id", "corners"});
    BranchVertex vx;
    vx.id = field::small_int(field::require(v, w, "id"), w + ".id");
    const Json& cs = field::array(field::require(v, w, "corners"), w + ".corners");
    for (std::size_t k = 0; k < cs.size(); ++k) {
      std::string wc = at(w + ".corners", k);
      const Json& c = field::object(cs[k], wc);
      field::only_keys(c, wc, {"sector", "corner", "angle"});
      VertexCorner vc;
      vc.sector = field::small_int(field::require(c, wc, "sector"), wc + ".sector");
      vc.corner = field::small_int(field::require(c, wc, "corner"), wc + ".corner");
      vc.angle = parse_angle(field::require(c, wc, "angle"), wc + ".angle");
      vx.corners.push_back(vc);
    }
    b.vertices.push_back(std::move(vx));
  }

  if (auto it = doc.find("orientation"); it != doc.end()) {
    field::array(*it, "orientation");
    std::vector<int> o;
    for (std::size_t k = 0; k < it->size(); ++k) {
      int x = field::small_int((*it)[k], at("orientation", k));
      if (x != 1 && x != -1) throw ParseError(at("orientation", k), "must be 1 or -1");
      o.push_back(x);
    }
    b.orientation = std::move(o);
  }

  if (auto it = doc.find("geometry"); it != doc.end()) {
    field::array(*it, "geometry");
    for (std::size_t k = 0; k < it->size(); ++k) {
      std::string w = at("geometry", k);
      const Json& g = field::object((*it)[k], w);
      field::only_keys(g, w, {"sector", "area", "diameter", "eta"});
      int s = field::small_int(field::require(g, w, "sector"), w + ".sector");
      if (s < 0 || s >= b.sector_count()) throw ParseError(w + ".sector", "no such sector");
      SectorGeometry& geo = b.sectors[s].geometry;
      if (auto a = g.find("area"); a != g.end()) {
        geo.area = field::rational(*a, w + ".area");
        if (*geo.area <= 0) throw ParseError(w + ".area", "must be positive");
      }
      if (auto d = g.find("diameter"); d != g.end()) {
        geo.diameter = field::rational(*d, w + ".diameter");
        if (*geo.diameter <= 0) throw ParseError(w + ".diameter", "must be positive");
      }
      if (auto h = g.find("eta"); h != g.end()) geo.eta = field::rational(*h, w + ".eta");
    }
  }
  return b;
}

Json complex_to_json(const BranchedSurface& b) {
  Json doc;
  doc["name"] = b.name;
  Json sectors = Json::array();
  for (const Sector& s : b.sectors) {
    Json j;
    j["id"] = s.id;
    j["kind"] = s.kind == SectorKind::Disc ? "disc" : "closed";
    if (s.kind == SectorKind::Closed) {
      j["genus"] = s.genus;
    } else {
      Json sides = Json::array();
      for (const Side& sd : s.sides) {
        Json x;
        x["edge"] = sd.edge;
        x["dir"] = sd.dir;
        sides.push_back(x);
      }
      Json corners = Json::array();
      for (Angle a : s.corners) corners.push_back(angle_text(a));
      j["sides"] = sides;
      j["corners"] = corners;
    }
    sectors.push_back(j);
  }
  doc["sectors"] = sectors;
  Json edges = Json::array();
  for (const BranchEdge& e : b.edges) {
    Json j;
    j["id"] = e.id;
    j["upper"] = Json::array({slot_json(e.top()), slot_json(e.bottom())});
    j["lower"] = slot_json(e.lower());
    j["endpoints"] = e.endpoints;
    if (e.length != 1) j["length"] = format_rational(e.length);
    edges.push_back(j);
  }
  doc["edges"] = edges;
  Json verts = Json::array();
  for (const BranchVertex& v : b.vertices) {
    Json j;
    j["id"] = v.id;
    Json cs = Json::array();
    for (const VertexCorner& c : v.corners) {
      Json x;
      x["sector"] = c.sector;
      x["corner"] = c.corner;
      x["angle"] = angle_text(c.angle);
      cs.push_back(x);
    }
    j["corners"] = cs;
    verts.push_back(j);
  }
  doc["vertices"] = verts;
  if (b.orientation) doc["orientation"] = *b.orientation;
  Json geo = Json::array();
  for (const Sector& s : b.sectors) {
    const SectorGeometry& g = s.geometry;
    if (!g.area && !g.diameter && !g.eta) continue;
    Json j;
    j["sector"] = s.id;
    if (g.area) j["area"] = format_rational(*g.area);
    if (g.diameter) j["diameter"] = format_rational(*g.diameter);
    if (g.eta) j["eta"] = format_rational(*g.eta);
    geo.push_back(j);
  }
  if (!geo.empty()) doc["geometry"] = geo;
  return doc;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // report line and column of the failing byte
    std::size_t pos = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(origin, "malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot read file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

BranchedSurface load_complex(const std::string& path) { return complex_from_json(read_json_file(path)); }

std::string canonical_text(const Json& doc) { return doc.dump(2) + "\n"; }

Json rational_json(const Rational& q) { return format_rational(q); }

Json rational_vector_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(format_rational(x));
  return a;
}

Json integer_vector_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(format_integer(x));
  return a;
}

} // namespace bsurf
