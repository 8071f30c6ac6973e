#pragma once

#include <stdexcept>
#include <string>

namespace bsurf {

// Malformed input: bad JSON, schema violations, bad flags. Exit code 2.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& field, const std::string& what)
      : std::runtime_error(field.empty() ? what : field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

// Well-formed input on which the requested operation is not defined. Exit code 1.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace bsurf
