#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hdtkg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown IRI, code, CURIE prefix or rule id.
class LookupError : public Error {
 public:
  using Error::Error;
};

// A statement that cannot exist in a graph (literal subject, invalid term).
class MalformedStatement : public Error {
 public:
  using Error::Error;
};

// Text that does not conform to an accepted grammar. `offset` is the byte
// index into the input where the problem was detected.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " (at offset " + std::to_string(offset) + ")"),
        detail_(message),
        offset_(offset) {}

  const std::string& detail() const noexcept { return detail_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string detail_;
  std::size_t offset_;
};

enum class Severity { error, warning };

inline const char* to_string(Severity s) {
  return s == Severity::error ? "error" : "warning";
}

}  // namespace hdtkg
