#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "rsv/identity.hpp"

namespace rsv {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message), line(line), column(column) {}

  int line;    // 0 when parsing a bare identity string
  int column;  // 1-based byte offset into the offending line
};

/// Parses one identity. Grammar:
///   identity := word ('=' | U+2248) word
///   word     := term+
///   term     := atom ('^' nat)?          nat >= 1
///   atom     := 'a'..'z' | '(' word ')'
/// Whitespace is ignored; exponents and parentheses expand to flat words,
/// e.g. "(xy)^2x" becomes xyxyx.
Identity parse_identity(std::string_view text);

/// Parses one identity per line; '#' starts a comment, blank lines are
/// skipped, duplicates (after canonical rendering) are dropped. Throws a
/// ParseError aggregating all per-line failures; an empty system is an error.
IdentitySystem parse_system(std::string_view text, std::string source = "");

}  // namespace rsv
