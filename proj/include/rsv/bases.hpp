#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rsv/identity.hpp"
#include "rsv/word.hpp"

namespace rsv {

/// A finite identity basis for one of the catalog varieties.
struct Basis {
  std::string name;
  std::optional<int> parameter;
  std::vector<Identity> identities;
  std::string note;  // nonempty when the printed source needed a correction
};

/// Bases by name: A, B, C_lambda, C_rho, N3, D, K (needs n), F_lambda, F_rho,
/// W_lambda, W_rho, L2_1, R2_1, L2, R2, Y2, C (needs n), N2, N2_1, L2vB2.
Basis basis_catalog(const std::string& name, std::optional<int> n = std::nullopt);

/// One elementary deduction step: every word p sigma(t) q of length at most
/// max_len obtained by matching a factor of w against sigma(s), where s = t is
/// the rule read in either orientation and sigma substitutes nonempty words.
/// Variables of the replacement side that are not bound by the match take
/// images over `alphabet` (defaults to the letters of w).
std::set<Word> apply_rule(const Identity& rule, const Word& w, int max_len);
std::set<Word> apply_rule(const Identity& rule, const Word& w, int max_len,
                          const std::set<Letter>& alphabet);

struct DerivationStep {
  std::string rule;  // canonical rendering of the rule applied
  bool backwards;    // rule applied right-to-left
  int position;      // match start within the previous word
  std::map<Letter, Word> substitution;
  Word result;
};

struct DerivationTrace {
  Word start;
  std::vector<DerivationStep> steps;
};

/// One line per step: "word  --[rule, pos, sigma]-->  word".
std::string render(const DerivationTrace& trace);

enum class DeriveStatus {
  kFound,
  kNotFound,        // the whole length-bounded ball was explored
  kBudgetExceeded,  // max_states hit before the ball was exhausted
};

struct DeriveResult {
  DeriveStatus status;
  std::optional<DerivationTrace> trace;
  std::size_t states_explored;
};

/// Breadth-first closure of the left side under single rule steps, bounded by
/// word length and state count. Absence of a trace is not a refutation.
DeriveResult derive_bounded(const Basis& basis, const Identity& id, int max_len,
                            std::size_t max_states);

/// Reachability index for a whole bounded ball: partitions every word of
/// length <= max_len over the given letters by derivability. Equivalent to
/// derive_bounded with an unlimited state budget, minus the traces.
class DerivationBall {
 public:
  DerivationBall(const Basis& basis, const std::string& letters, int max_len);

  bool connected(const Word& u, const Word& v) const;
  std::size_t size() const { return parent_.size(); }

 private:
  int index_of(const Word& w) const;
  int find(int x) const;

  std::string letters_;
  int max_len_;
  mutable std::vector<int> parent_;
};

}  // namespace rsv
