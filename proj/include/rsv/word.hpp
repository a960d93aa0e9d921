#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rsv {

using Letter = char;

/// A nonempty finite sequence of letters: an element of the free semigroup
/// over a totally ordered alphabet (lowercase letters in the text grammar,
/// any byte in-process).
class Word {
 public:
  Word(const char* letters) : Word(std::string(letters)) {}
  explicit Word(std::string letters);
  explicit Word(std::string_view letters) : Word(std::string(letters)) {}

  int length() const { return static_cast<int>(letters_.size()); }
  Letter head() const { return letters_.front(); }
  Letter tail() const { return letters_.back(); }
  Letter at(int i) const { return letters_[static_cast<std::size_t>(i)]; }
  const std::string& str() const { return letters_; }

  Word reversed() const;

  friend Word operator+(const Word& a, const Word& b) {
    return Word(a.letters_ + b.letters_);
  }

  auto operator<=>(const Word&) const = default;

  std::string::const_iterator begin() const { return letters_.begin(); }
  std::string::const_iterator end() const { return letters_.end(); }

 private:
  std::string letters_;
};

/// Length-then-lexicographic order; used for canonical element naming.
bool shortlex_less(const Word& a, const Word& b);
bool shortlex_less(const std::string& a, const std::string& b);

/// Every per-word statistic the identity criteria consume, computed in one
/// left-to-right and one right-to-left pass.
struct WordProfile {
  explicit WordProfile(const Word& u);

  std::set<Letter> content;
  std::map<Letter, int> occurrences;
  int length;
  Letter head;
  Letter tail;
  std::string heads;  // heads[s-1] is the s-th letter from the left
  std::string tails;  // tails[s-1] is the s-th letter from the right
  std::set<Letter> simple_letters;
  Word left_core;   // first occurrence of each letter, in order
  Word right_core;  // last occurrence of each letter, in order

  int occ(Letter x) const;
  std::optional<Letter> head_at(int s) const;  // 1-based; nullopt past the end
  std::optional<Letter> tail_at(int s) const;
};

WordProfile analyze(const Word& u);

/// True iff some letter occupies q consecutive positions of u. Requires q >= 2.
bool has_power_factor(const Word& u, int q);

/// True iff u is an isoterm for the identity x1...xp = x(p+1)^q, i.e.
/// l(u) < p and u has no q-th power of a letter as a factor. Requires p,q >= 2.
bool is_pq_trivial(const Word& u, int p, int q);

/// The l(u)-1 ordered pairs of consecutive letters.
std::vector<std::pair<Letter, Letter>> adjacent_pairs(const Word& u);

}  // namespace rsv

template <>
struct std::hash<rsv::Word> {
  std::size_t operator()(const rsv::Word& w) const noexcept {
    return std::hash<std::string>{}(w.str());
  }
};
