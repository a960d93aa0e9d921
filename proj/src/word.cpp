#include "rsv/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsv {

Word::Word(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw std::invalid_argument("a word must contain at least one letter");
  }
}

Word Word::reversed() const {
  return Word(std::string(letters_.rbegin(), letters_.rend()));
}

bool shortlex_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool shortlex_less(const Word& a, const Word& b) {
  return shortlex_less(a.str(), b.str());
}

WordProfile::WordProfile(const Word& u)
    : length(u.length()),
      head(u.head()),
      tail(u.tail()),
      heads(u.str()),
      tails(u.reversed().str()),
      left_core(u),
      right_core(u) {
  for (Letter x : u) ++occurrences[x];
  for (const auto& [x, k] : occurrences) {
    content.insert(x);
    if (k == 1) simple_letters.insert(x);
  }

  std::string lc, rc;
  std::set<Letter> seen;
  for (Letter x : u) {
    if (seen.insert(x).second) lc.push_back(x);
  }
  seen.clear();
  for (auto it = u.str().rbegin(); it != u.str().rend(); ++it) {
    if (seen.insert(*it).second) rc.push_back(*it);
  }
  std::reverse(rc.begin(), rc.end());
  left_core = Word(lc);
  right_core = Word(rc);
}

int WordProfile::occ(Letter x) const {
  auto it = occurrences.find(x);
  return it == occurrences.end() ? 0 : it->second;
}

std::optional<Letter> WordProfile::head_at(int s) const {
  if (s < 1 || s > length) return std::nullopt;
  return heads[static_cast<std::size_t>(s - 1)];
}

std::optional<Letter> WordProfile::tail_at(int s) const {
  if (s < 1 || s > length) return std::nullopt;
  return tails[static_cast<std::size_t>(s - 1)];
}

WordProfile analyze(const Word& u) { return WordProfile(u); }

bool has_power_factor(const Word& u, int q) {
  if (q < 2) throw std::invalid_argument("power factor exponent must be >= 2");
  int run = 1;
  for (int i = 1; i < u.length(); ++i) {
    run = u.at(i) == u.at(i - 1) ? run + 1 : 1;
    if (run >= q) return true;
  }
  return false;
}

bool is_pq_trivial(const Word& u, int p, int q) {
  if (p < 2 || q < 2) throw std::invalid_argument("p and q must be >= 2");
  return u.length() < p && !has_power_factor(u, q);
}

std::vector<std::pair<Letter, Letter>> adjacent_pairs(const Word& u) {
  std::vector<std::pair<Letter, Letter>> out;
  out.reserve(static_cast<std::size_t>(u.length() > 0 ? u.length() - 1 : 0));
  for (int i = 0; i + 1 < u.length(); ++i) {
    out.emplace_back(u.at(i), u.at(i + 1));
  }
  return out;
}

}  // namespace rsv
