#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hdtkg/rdf_io.hpp"

namespace hdtkg::detail {

// Offset of the first byte that breaks UTF-8 well-formedness, if any.
std::optional<std::size_t> find_invalid_utf8(std::string_view text);

// False for surrogates and values past U+10FFFF.
bool append_utf8(std::string& out, std::uint32_t code_point);

// Diagnostic at `offset`, clamped to the last byte of a non-empty input.
ParseDiagnostic diagnostic_at(std::string_view text, std::size_t offset, std::string message,
                              Severity severity = Severity::error);

inline bool is_hex(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

inline std::uint32_t hex_value(char c) {
  if (c >= '0' && c <= '9') return static_cast<std::uint32_t>(c - '0');
  if (c >= 'a' && c <= 'f') return static_cast<std::uint32_t>(c - 'a' + 10);
  return static_cast<std::uint32_t>(c - 'A' + 10);
}

}  // namespace hdtkg::detail
