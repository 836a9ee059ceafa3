#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace td {

// A hard size cap was exceeded (oracle enumeration, naive DP, ...).
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file; line is 1-based.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, uint64_t line_no)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
  explicit ParseError(const std::string& msg) : std::runtime_error(msg), line(0) {}
  uint64_t line;
};

}  // namespace td
