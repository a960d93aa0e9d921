#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsv/semigroup.hpp"
#include "rsv/word.hpp"

namespace rsv {

/// One defining relation: lhs = rhs, or lhs = 0 when rhs is absent.
struct Relation {
  Word lhs;
  std::optional<Word> rhs;
};

struct Presentation {
  std::vector<Letter> generators;
  std::vector<Relation> relations;
  int closure_cap;  // longest word explored while closing the congruence
};

/// Raised when the bounded closure cannot certify a finite quotient.
struct ClosureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Enumerates the nonempty words of length <= closure_cap, closes the
/// congruence generated by the relations (plus zero absorption) with
/// union-find, and returns the quotient when it is certifiably closed:
/// products of class representatives stay inside the explored ball, the
/// resulting table is associative and the relations hold at the generators.
/// Elements are named by shortest-then-lex class representatives, ordered
/// generators first, then shortlex, zero last.
FiniteSemigroup from_presentation(const Presentation& p);

}  // namespace rsv
