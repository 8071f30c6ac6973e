#include "bsurf/certificate.hpp"
#include "bsurf/report.hpp"
#include "bsurf/solution.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace bsurf;

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

long long max_coord_from_env() {
  const char* s = std::getenv("BSURF_MAX_COORD");
  if (!s || !*s) return 6;
  char* end = nullptr;
  long long v = std::strtoll(s, &end, 10);
  if (*end != '\0' || v < 0) throw ParseError("BSURF_MAX_COORD", std::string("not a nonnegative integer: '") + s + "'");
  return v;
}

void emit(const Json& doc) { std::cout << canonical_text(doc); }

void write_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw ParseError("-o", "cannot write " + path);
  out << canonical_text(doc);
}

BranchedSurface load_valid(const std::string& path) {
  BranchedSurface b = load_complex(path);
  require_valid(b);
  return b;
}

void emit_error(const char* kind, const std::string& message, const std::string& field = "") {
  Json e{{"error", kind}, {"message", message}};
  if (!field.empty()) e["field"] = field;
  std::cerr << canonical_text(e);
}

int recheck(const std::string& path) {
  Json cert = read_json_file(path);
  RecheckResult r = recheck_certificate(cert, std::filesystem::path(path).parent_path().string());
  Json out{{"certificate", path}, {"ok", r.ok}};
  if (!r.ok) {
    out["field"] = r.field;
    out["detail"] = r.detail;
  }
  emit(out);
  return r.ok ? kOk : kDomain;
}

struct Options {
  std::string file;
  std::string weights;
  std::string output;
  std::string instance;
  std::string cert;
  std::string loop;
  std::string params;
  std::string k;
  long long max_coord = -1;
  long long radius = 0;
  long long base = 0;
  int budget = 10;
  int edge = -1;
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on branched surfaces"};
  app.require_subcommand(0, 1);
  Options o;
  std::string top_recheck;
  app.add_option("--recheck", top_recheck, "Re-verify a certificate and exit");
  app.set_version_flag("--version", kToolkitVersion);

  auto with_file = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("file", o.file, "Branched surface (.bsurf.json)")->required();
    return c;
  };
  auto weights_opt = [&](CLI::App* c) { c->add_option("--weights", o.weights, "Comma separated sector weights")->required(); };

  CLI::App* validate_cmd = with_file("validate", "Check the structural invariants");
  CLI::App* vertices_cmd = with_file("vertices", "Vertices of the projective solution polytope");
  CLI::App* fundamentals_cmd = with_file("fundamentals", "Hilbert basis of the solution cone");
  fundamentals_cmd->add_option("--max-coord", o.max_coord, "Coordinate bound of the search");
  CLI::App* decompose_cmd = with_file("decompose", "Write a solution as a sum of fundamental surfaces");
  weights_opt(decompose_cmd);
  CLI::App* qh_cmd = with_file("qh-cert", "Quasi-hyperbolicity certificate");
  CLI::App* iso_cmd = with_file("iso-cert", "Isoperimetric constants certificate");
  CLI::App* check_iso_cmd = with_file("check-iso", "Check the isoperimetric chain on a disc instance");
  check_iso_cmd->add_option("--instance", o.instance, "Disc or annulus instance")->required();
  check_iso_cmd->add_option("--cert", o.cert, "iso certificate to use instead of recomputing");
  CLI::App* gb_cmd = with_file("gauss-bonnet", "Combinatorial Gauss-Bonnet defect of an instance");
  gb_cmd->add_option("--instance", o.instance, "Disc or annulus instance")->required();
  CLI::App* growth_cmd = with_file("growth-cert", "Growth polynomial certificate");
  CLI::App* sample_cmd = with_file("growth-sample", "Sample a leaf ball of a carried surface");
  weights_opt(sample_cmd);
  sample_cmd->add_option("--radius", o.radius, "Ball radius")->required()->check(CLI::NonNegativeNumber);
  sample_cmd->add_option("--base", o.base, "Base sheet (global index)");
  CLI::App* holonomy_cmd = with_file("holonomy", "Signed crossing sum of a loop");
  weights_opt(holonomy_cmd);
  holonomy_cmd->add_option("--loop", o.loop, "Loop document")->required();
  CLI::App* cover_cmd = with_file("double-cover", "Transverse orientation double cover");
  cover_cmd->add_option("-o", o.output, "Where to write the cover");
  CLI::App* hb_cmd = with_file("hb", "Horizontal boundary components");
  CLI::App* large_cmd = with_file("large", "Horizontal largeness test");
  CLI::App* split_cmd = with_file("split", "Split along a carried surface until large");
  weights_opt(split_cmd);
  split_cmd->add_option("--budget", o.budget, "Maximum number of moves")->check(CLI::NonNegativeNumber);
  split_cmd->add_option("--edge", o.edge, "Single move along this edge")->check(CLI::NonNegativeNumber);
  split_cmd->add_option("-o", o.output, "Where to write the split complex");
  CLI::App* genus_cmd = with_file("genus-bound", "Heegaard genus bound certificate");
  genus_cmd->add_option("--K", o.k, "Base of the weight ceiling tower");
  genus_cmd->add_option("--params", o.params, "Crossing counts (r_max, s0, s1)");
  CLI::App* recheck_cmd = app.add_subcommand("recheck", "Re-verify a certificate");
  recheck_cmd->add_option("cert", o.cert, "Certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!top_recheck.empty()) return recheck(top_recheck);
    if (app.got_subcommand(recheck_cmd)) return recheck(o.cert);
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return kUsage;
    }

    auto certify = [&](const std::string& kind, const BranchedSurface& b, const Json& params) {
      Json payload = recompute_payload(kind, b, params);
      emit(make_certificate(kind, o.file, b, params, payload));
      return payload;
    };

    if (app.got_subcommand(validate_cmd)) {
      Json r = validate_report(load_complex(o.file));
      emit(r);
      return r["valid"].get<bool>() ? kOk : kDomain;
    }
    BranchedSurface b = load_valid(o.file);
    long long env_bound = max_coord_from_env();

    if (app.got_subcommand(vertices_cmd)) {
      emit(vertices_report(b));
    } else if (app.got_subcommand(fundamentals_cmd)) {
      emit(fundamentals_report(b, o.max_coord >= 0 ? o.max_coord : env_bound));
    } else if (app.got_subcommand(decompose_cmd)) {
      bool found = false;
      emit(decompose_report(b, parse_weights(o.weights), env_bound, &found));
      return found ? kOk : kDomain;
    } else if (app.got_subcommand(qh_cmd)) {
      Json payload = certify("qh", b, Json::object());
      return payload["verdict"].get<bool>() ? kOk : kDomain;
    } else if (app.got_subcommand(iso_cmd)) {
      certify("iso", b, Json::object());
    } else if (app.got_subcommand(check_iso_cmd)) {
      DiscInstance a = load_instance(o.instance);
      IsoCertificate cert;
      if (!o.cert.empty()) {
        Json doc = read_json_file(o.cert);
        if (!doc.is_object() || !doc.contains("payload")) throw ParseError("--cert", "not a certificate");
        if (doc.value("kind", "") != "iso") throw ParseError("--cert", "not an iso certificate");
        cert = iso_from_json(doc["payload"]);
      } else {
        cert = iso_constants(b);
      }
      bool pass = false;
      emit(iso_check_report(b, a, cert, &pass));
      return pass ? kOk : kDomain;
    } else if (app.got_subcommand(gb_cmd)) {
      bool zero = false;
      emit(gauss_bonnet_report(b, load_instance(o.instance), &zero));
      return zero ? kOk : kDomain;
    } else if (app.got_subcommand(growth_cmd)) {
      certify("growth", b, Json::object());
    } else if (app.got_subcommand(sample_cmd)) {
      emit(growth_sample_report(b, parse_weights(o.weights), o.radius, o.base));
    } else if (app.got_subcommand(holonomy_cmd)) {
      emit(holonomy_report(b, parse_weights(o.weights), load_loop(o.loop)));
    } else if (app.got_subcommand(cover_cmd)) {
      OrientationCover oc = orientation_double_cover(b);
      if (!o.output.empty()) write_file(o.output, complex_to_json(oc.cover));
      emit(cover_report(oc));
    } else if (app.got_subcommand(hb_cmd)) {
      emit(hb_report(horizontal_boundary(b)));
    } else if (app.got_subcommand(large_cmd)) {
      emit(large_report(is_horizontally_large(b)));
    } else if (app.got_subcommand(split_cmd)) {
      Json params{{"weights", weights_json(parse_weights(o.weights))}, {"budget", o.budget}};
      if (o.edge >= 0) params["edge"] = o.edge;
      Json payload = certify("split", b, params);
      if (!o.output.empty()) write_file(o.output, payload["final_complex"]);
    } else if (app.got_subcommand(genus_cmd)) {
      Json params{{"max_coord", env_bound}};
      if (!o.k.empty()) params["K"] = o.k;
      if (!o.params.empty()) params["params"] = read_json_file(o.params);
      certify("genus", b, params);
    }
    return kOk;
  } catch (const ParseError& e) {
    emit_error("parse", e.what(), e.field());
    return kUsage;
  } catch (const InvalidComplex& e) {
    emit(validate_report(load_complex(o.file)));
    emit_error("invalid", e.what());
    return kDomain;
  } catch (const DomainError& e) {
    emit_error("domain", e.what());
    return kDomain;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return kDomain;
  }
}
