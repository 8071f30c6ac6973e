#pragma once

#include "bsurf/io.hpp"

#include <optional>
#include <string>

namespace bsurf {

extern const char* const kToolkitVersion;

std::string sha256_hex(const std::string& data);

// Hash of the canonical serialization of the parsed complex.
std::string input_hash(const BranchedSurface& b);

// Timestamp in UTC; honours SOURCE_DATE_EPOCH.
std::string timestamp_now();

// kind: qh, iso, growth, genus, split. params holds the flags needed to recompute.
Json recompute_payload(const std::string& kind, const BranchedSurface& b, const Json& params);

Json make_certificate(const std::string& kind, const std::string& input_path, const BranchedSurface& b, const Json& params, const Json& payload);

// Path of the first difference between two JSON values ("" when equal).
std::optional<std::string> first_difference(const Json& expected, const Json& actual, const std::string& path);

struct RecheckResult {
  bool ok = false;
  std::string field;   // first divergent field
  std::string detail;
};

// Relative input paths are tried from the working directory, then from cert_dir and its parents.
RecheckResult recheck_certificate(const Json& cert, const std::string& cert_dir);

} // namespace bsurf
