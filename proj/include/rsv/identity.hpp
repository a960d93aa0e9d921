#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rsv/word.hpp"

namespace rsv {

/// A semigroup identity: a formal equation between two words.
struct Identity {
  Word lhs;
  Word rhs;

  bool trivial() const { return lhs == rhs; }
  Identity reversed() const { return {lhs.reversed(), rhs.reversed()}; }

  auto operator<=>(const Identity&) const = default;
};

/// An ordered, duplicate-free list of identities.
struct IdentitySystem {
  std::vector<Identity> identities;
  std::string source;  // file name when read from disk, else empty
};

/// Canonical textual form: maximal letter runs compressed as x^k, sides
/// joined by '='. parse_identity(render(id)) == id.
std::string render(const Word& w);
std::string render(const Identity& id);

}  // namespace rsv
