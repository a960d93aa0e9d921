#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rsv/identity.hpp"
#include "rsv/word.hpp"

namespace rsv {

/// A finite semigroup given by its full multiplication table. Tables are
/// immutable after construction; all queries are safe for concurrent reads.
struct FiniteSemigroup {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;
  std::map<Letter, int> generators;
  std::optional<int> zero;

  int size() const { return static_cast<int>(elements.size()); }
  int product(int a, int b) const {
    return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  int element_index(const std::string& element_name) const;

  /// Throws std::invalid_argument unless the table is total, associative and
  /// (when a zero is designated) the zero is absorbing.
  void validate() const;
};

using Assignment = std::map<Letter, int>;

/// Value of the word under the assignment: a left-to-right table fold.
int evaluate(const FiniteSemigroup& s, const Word& u, const Assignment& phi);

/// Number of assignments an exhaustive check of the identity enumerates.
std::uint64_t bruteforce_cost(const FiniteSemigroup& s, const Identity& id);

/// Exhaustive ground truth: true iff both sides agree under every assignment
/// of elements to the identity's letters.
bool satisfies_bruteforce(const FiniteSemigroup& s, const Identity& id);

/// The opposite semigroup: dual(s).table[i][j] = s.table[j][i].
FiniteSemigroup dual(const FiniteSemigroup& s);

/// True iff image is total and multiplicative on s and onto t.
bool check_homomorphism(const FiniteSemigroup& s, const FiniteSemigroup& t,
                        const std::vector<int>& image);

/// Table dump used by the CLI: {name, n?, elements, generators, zero?, table}.
std::string table_json(const FiniteSemigroup& s, std::optional<int> n = std::nullopt);

/// Batch form of satisfies_bruteforce: evaluates every word of length at most
/// max_len over the first num_letters letters under every assignment once,
/// then answers identity queries by comparing value-vector classes.
class BulkOracle {
 public:
  BulkOracle(const FiniteSemigroup& s, int num_letters, int max_len);

  bool holds(const Word& u, const Word& v) const;
  bool holds(const Identity& id) const { return holds(id.lhs, id.rhs); }
  int word_class(const Word& u) const;

 private:
  std::unordered_map<std::string, int> class_of_;
};

}  // namespace rsv
