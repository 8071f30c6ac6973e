#include "bsurf/certificate.hpp"
#include "bsurf/report.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <sstream>

namespace bsurf {

const char* const kToolkitVersion = "bsurf 1.0.0";

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr)) throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

std::string input_hash(const BranchedSurface& b) { return sha256_hex(canonical_text(complex_to_json(b))); }

std::string timestamp_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* s = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end != s && *end == '\0') t = static_cast<std::time_t>(v);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

Json recompute_payload(const std::string& kind, const BranchedSurface& b, const Json& params) {
  const std::string where = "params";
  field::object(params, where);
  if (kind == "qh") return qh_payload(b);
  if (kind == "iso") return iso_payload(b);
  if (kind == "growth") return growth_payload(b);
  if (kind == "genus") {
    field::only_keys(params, where, {"max_coord", "K", "params"});
    long long max_coord = field::integer(field::require(params, where, "max_coord"), where + ".max_coord");
    std::optional<Integer> k;
    if (params.contains("K") && !params["K"].is_null()) k = integer_from_json(params["K"], where + ".K");
    std::optional<CeilingParams> p;
    if (params.contains("params") && !params["params"].is_null()) p = params_from_json(params["params"], default_ceiling_params(b));
    return genus_payload(b, max_coord, k, p);
  }
  if (kind == "split") {
    field::only_keys(params, where, {"weights", "edge", "budget"});
    Weights w = weights_from_json(field::require(params, where, "weights"), where + ".weights");
    std::optional<int> edge;
    if (params.contains("edge") && !params["edge"].is_null()) edge = field::small_int(params["edge"], where + ".edge");
    int budget = field::small_int(field::require(params, where, "budget"), where + ".budget");
    return split_payload(b, w, edge, budget);
  }
  throw ParseError("kind", "unknown certificate kind '" + kind + "'");
}

Json make_certificate(const std::string& kind, const std::string& input_path, const BranchedSurface& b, const Json& params, const Json& payload) {
  return Json{{"kind", kind},
              {"version", kToolkitVersion},
              {"input", input_path},
              {"input_hash", input_hash(b)},
              {"params", params},
              {"payload", payload},
              {"timestamp", timestamp_now()}};
}

std::optional<std::string> first_difference(const Json& expected, const Json& actual, const std::string& path) {
  if (expected.is_number() && actual.is_number()) return expected == actual ? std::nullopt : std::optional<std::string>(path);
  if (expected.type() != actual.type()) return path;
  if (expected.is_object()) {
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      std::string p = path.empty() ? it.key() : path + "." + it.key();
      if (!actual.contains(it.key())) return p;
      if (auto d = first_difference(it.value(), actual[it.key()], p)) return d;
    }
    for (auto it = actual.begin(); it != actual.end(); ++it)
      if (!expected.contains(it.key())) return path.empty() ? it.key() : path + "." + it.key();
    return std::nullopt;
  }
  if (expected.is_array()) {
    std::size_t n = std::min(expected.size(), actual.size());
    for (std::size_t i = 0; i < n; ++i)
      if (auto d = first_difference(expected[i], actual[i], path + "[" + std::to_string(i) + "]")) return d;
    if (expected.size() != actual.size()) return path + "[" + std::to_string(n) + "]";
    return std::nullopt;
  }
  if (expected != actual) return path;
  return std::nullopt;
}

RecheckResult recheck_certificate(const Json& cert, const std::string& cert_dir) {
  const std::string where = "certificate";
  field::object(cert, where);
  field::only_keys(cert, where, {"kind", "version", "input", "input_hash", "params", "payload", "timestamp"});
  std::string kind = field::string(field::require(cert, where, "kind"), "kind");
  std::string input = field::string(field::require(cert, where, "input"), "input");
  std::string hash = field::string(field::require(cert, where, "input_hash"), "input_hash");
  const Json& params = field::require(cert, where, "params");
  const Json& payload = field::require(cert, where, "payload");
  field::require(cert, where, "version");

  namespace fs = std::filesystem;
  fs::path path(input);
  if (path.is_relative() && !fs::exists(path)) {
    // walk up from the certificate's directory
    for (fs::path dir = fs::absolute(cert_dir.empty() ? "." : cert_dir); !dir.empty(); dir = dir.parent_path()) {
      if (fs::exists(dir / path)) {
        path = dir / path;
        break;
      }
      if (dir == dir.parent_path()) break;
    }
  }
  BranchedSurface b = load_complex(path.string());

  RecheckResult r;
  if (input_hash(b) != hash) {
    r.field = "input_hash";
    r.detail = "input file " + path.string() + " does not match the recorded hash";
    return r;
  }
  Json fresh = recompute_payload(kind, b, params);
  if (auto d = first_difference(payload, fresh, "payload")) {
    r.field = *d;
    r.detail = "recomputed value differs";
    return r;
  }
  r.ok = true;
  return r;
}

} // namespace bsurf
