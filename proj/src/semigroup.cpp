#include "rsv/semigroup.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "rsv/parser.hpp"

namespace rsv {

int FiniteSemigroup::element_index(const std::string& element_name) const {
  for (int i = 0; i < size(); ++i) {
    if (elements[static_cast<std::size_t>(i)] == element_name) return i;
  }
  throw std::invalid_argument("no element named '" + element_name + "' in " + name);
}

void FiniteSemigroup::validate() const {
  const int n = size();
  if (n == 0) throw std::invalid_argument(name + ": empty element set");
  if (static_cast<int>(table.size()) != n) {
    throw std::invalid_argument(name + ": table has wrong row count");
  }
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument(name + ": table has wrong column count");
    }
    for (int v : row) {
      if (v < 0 || v >= n) throw std::invalid_argument(name + ": table is not closed");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (product(product(i, j), k) != product(i, product(j, k))) {
          throw std::invalid_argument(name + ": table is not associative");
        }
      }
    }
  }
  if (zero) {
    for (int i = 0; i < n; ++i) {
      if (product(*zero, i) != *zero || product(i, *zero) != *zero) {
        throw std::invalid_argument(name + ": designated zero is not absorbing");
      }
    }
  }
  for (const auto& [letter, idx] : generators) {
    if (idx < 0 || idx >= n) {
      throw std::invalid_argument(name + ": generator '" + std::string(1, letter) +
                                  "' is out of range");
    }
  }
}

int evaluate(const FiniteSemigroup& s, const Word& u, const Assignment& phi) {
  auto lookup = [&](Letter x) {
    auto it = phi.find(x);
    if (it == phi.end()) {
      throw std::invalid_argument("letter '" + std::string(1, x) +
                                  "' has no assigned value");
    }
    return it->second;
  };
  int value = lookup(u.at(0));
  for (int i = 1; i < u.length(); ++i) value = s.product(value, lookup(u.at(i)));
  return value;
}

namespace {

std::vector<Letter> identity_letters(const Identity& id) {
  std::set<Letter> letters;
  for (Letter x : id.lhs) letters.insert(x);
  for (Letter x : id.rhs) letters.insert(x);
  return {letters.begin(), letters.end()};
}

}  // namespace

std::uint64_t bruteforce_cost(const FiniteSemigroup& s, const Identity& id) {
  const std::size_t k = identity_letters(id).size();
  std::uint64_t cost = 1;
  for (std::size_t i = 0; i < k; ++i) cost *= static_cast<std::uint64_t>(s.size());
  return cost;
}

bool satisfies_bruteforce(const FiniteSemigroup& s, const Identity& id) {
  const std::vector<Letter> letters = identity_letters(id);
  const int k = static_cast<int>(letters.size());
  const int n = s.size();

  std::vector<int> digits(static_cast<std::size_t>(k), 0);
  Assignment phi;
  while (true) {
    for (int i = 0; i < k; ++i) {
      phi[letters[static_cast<std::size_t>(i)]] = digits[static_cast<std::size_t>(i)];
    }
    if (evaluate(s, id.lhs, phi) != evaluate(s, id.rhs, phi)) return false;

    int pos = 0;
    while (pos < k && ++digits[static_cast<std::size_t>(pos)] == n) {
      digits[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == k) return true;
  }
}

FiniteSemigroup dual(const FiniteSemigroup& s) {
  FiniteSemigroup d = s;
  constexpr std::string_view suffix = "^op";
  if (d.name.size() > suffix.size() &&
      d.name.compare(d.name.size() - suffix.size(), suffix.size(), suffix) == 0) {
    d.name.erase(d.name.size() - suffix.size());
  } else {
    d.name += suffix;
  }
  for (int i = 0; i < s.size(); ++i) {
    for (int j = 0; j < s.size(); ++j) {
      d.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s.product(j, i);
    }
  }
  return d;
}

bool check_homomorphism(const FiniteSemigroup& s, const FiniteSemigroup& t,
                        const std::vector<int>& image) {
  if (static_cast<int>(image.size()) != s.size()) return false;
  std::vector<bool> hit(static_cast<std::size_t>(t.size()), false);
  for (int v : image) {
    if (v < 0 || v >= t.size()) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return false;
  for (int i = 0; i < s.size(); ++i) {
    for (int j = 0; j < s.size(); ++j) {
      if (image[static_cast<std::size_t>(s.product(i, j))] !=
          t.product(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(j)])) {
        return false;
      }
    }
  }
  return true;
}

std::string table_json(const FiniteSemigroup& s, std::optional<int> n) {
  nlohmann::ordered_json j;
  j["name"] = s.name;
  if (n) j["n"] = *n;
  j["elements"] = s.elements;
  nlohmann::ordered_json gens = nlohmann::ordered_json::object();
  for (const auto& [letter, idx] : s.generators) gens[std::string(1, letter)] = idx;
  j["generators"] = gens;
  if (s.zero) j["zero"] = *s.zero;
  j["table"] = s.table;
  return j.dump(2);
}

BulkOracle::BulkOracle(const FiniteSemigroup& s, int num_letters, int max_len) {
  const int n = s.size();
  std::uint64_t assignments = 1;
  for (int i = 0; i < num_letters; ++i) assignments *= static_cast<std::uint64_t>(n);

  // phi[a][x] is the element assignment a gives to letter x.
  std::vector<std::vector<int>> phi(static_cast<std::size_t>(assignments),
                                    std::vector<int>(static_cast<std::size_t>(num_letters)));
  for (std::uint64_t a = 0; a < assignments; ++a) {
    std::uint64_t rest = a;
    for (int x = 0; x < num_letters; ++x) {
      phi[a][static_cast<std::size_t>(x)] = static_cast<int>(rest % static_cast<std::uint64_t>(n));
      rest /= static_cast<std::uint64_t>(n);
    }
  }

  std::map<std::vector<int>, int> classes;
  std::string word;
  std::vector<std::vector<int>> values(static_cast<std::size_t>(max_len) + 1,
                                       std::vector<int>(static_cast<std::size_t>(assignments)));

  auto record = [&](int depth) {
    auto [it, inserted] =
        classes.emplace(values[static_cast<std::size_t>(depth)], static_cast<int>(classes.size()));
    (void)inserted;
    class_of_.emplace(word, it->second);
  };

  auto rec = [&](auto&& self, int depth) -> void {
    for (int x = 0; x < num_letters; ++x) {
      word.push_back(static_cast<char>('a' + x));
      auto& cur = values[static_cast<std::size_t>(depth + 1)];
      const auto& prev = values[static_cast<std::size_t>(depth)];
      for (std::uint64_t a = 0; a < assignments; ++a) {
        int e = phi[a][static_cast<std::size_t>(x)];
        cur[a] = depth == 0 ? e : s.product(prev[a], e);
      }
      record(depth + 1);
      if (depth + 1 < max_len) self(self, depth + 1);
      word.pop_back();
    }
  };
  rec(rec, 0);
}

int BulkOracle::word_class(const Word& u) const {
  auto it = class_of_.find(u.str());
  if (it == class_of_.end()) {
    throw std::invalid_argument("word '" + u.str() + "' is outside the oracle's range");
  }
  return it->second;
}

bool BulkOracle::holds(const Word& u, const Word& v) const {
  return word_class(u) == word_class(v);
}

}  // namespace rsv
