#pragma once

#include "bsurf/complex.hpp"

#include <json.hpp>

#include <string>

namespace bsurf {

using Json = nlohmann::ordered_json;

// Schema-checked conversion; throws ParseError naming the offending field.
BranchedSurface complex_from_json(const Json& doc);
Json complex_to_json(const BranchedSurface& b);

// Reads and parses a JSON file; malformed JSON and unreadable files are ParseErrors.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& origin);

BranchedSurface load_complex(const std::string& path);

// Canonical text: two-space indented JSON plus a trailing newline.
std::string canonical_text(const Json& doc);

// Field readers shared by the other document parsers.
namespace field {
void only_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> allowed);
const Json& require(const Json& obj, const std::string& where, const char* key);
long long integer(const Json& v, const std::string& where);
int small_int(const Json& v, const std::string& where);
Rational rational(const Json& v, const std::string& where);
std::string string(const Json& v, const std::string& where);
const Json& array(const Json& v, const std::string& where);
const Json& object(const Json& v, const std::string& where);
} // namespace field

Json rational_json(const Rational& q);
Json rational_vector_json(const std::vector<Rational>& v);
Json integer_vector_json(const std::vector<Integer>& v);

} // namespace bsurf
