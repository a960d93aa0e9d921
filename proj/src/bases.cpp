#include "rsv/bases.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "rsv/parser.hpp"

namespace rsv {

namespace {

// --- rewriting engine ----------------------------------------------------
//
// One rule orientation rewrites w = p m q into p sigma(t) q whenever m can be
// written as sigma(s). Variables that occur once in s and never in t only
// split the match redundantly, so maximal runs of them are matched as a
// single gap of bounded-below length.

struct Token {
  char var = 0;                // 0 marks a gap
  std::vector<char> gap_vars;  // the run of variables a gap stands for
};

std::vector<Token> compile_pattern(const std::string& s, const std::map<char, int>& occ_s,
                                   const std::map<char, int>& occ_t) {
  std::vector<Token> tokens;
  for (char c : s) {
    const bool collapsible = occ_s.at(c) == 1 && !occ_t.count(c);
    if (collapsible && !tokens.empty() && tokens.back().var == 0) {
      tokens.back().gap_vars.push_back(c);
    } else if (collapsible) {
      tokens.push_back({0, {c}});
    } else {
      tokens.push_back({c, {}});
    }
  }
  return tokens;
}

template <bool WithSigma, typename Emit>
void rewrite_one_direction(const std::string& s, const std::string& t, const std::string& w,
                           int max_len, const std::string& alphabet, Emit&& emit) {
  std::map<char, int> occ_s, occ_t;
  for (char c : s) ++occ_s[c];
  for (char c : t) ++occ_t[c];
  const std::vector<Token> tokens = compile_pattern(s, occ_s, occ_t);

  std::map<char, std::string> sigma;
  std::string acc;

  auto tokens_min = [&](std::size_t ti) {
    int m = 0;
    for (std::size_t i = ti; i < tokens.size(); ++i) {
      if (tokens[i].var == 0) {
        m += static_cast<int>(tokens[i].gap_vars.size());
      } else {
        auto it = sigma.find(tokens[i].var);
        m += it == sigma.end() ? 1 : static_cast<int>(it->second.size());
      }
    }
    return m;
  };

  auto replacement_min = [&](std::size_t ti) {
    int m = 0;
    for (std::size_t i = ti; i < t.size(); ++i) {
      auto it = sigma.find(t[i]);
      m += it == sigma.end() ? 1 : static_cast<int>(it->second.size());
    }
    return m;
  };

  auto assign_split = [&](const std::vector<char>& vars, const std::string& image) {
    const int k = static_cast<int>(vars.size());
    for (int i = 0; i < k; ++i) {
      sigma[vars[static_cast<std::size_t>(i)]] =
          i == k - 1 ? image.substr(static_cast<std::size_t>(i))
                     : image.substr(static_cast<std::size_t>(i), 1);
    }
  };
  auto unassign = [&](const std::vector<char>& vars) {
    for (char v : vars) sigma.erase(v);
  };

  // Builds sigma(t) into acc, enumerating images for unbound variables.
  auto expand = [&](auto&& self, std::size_t ti, int budget, auto&& done) -> void {
    if (ti == t.size()) {
      done();
      return;
    }
    const char v = t[ti];
    if (auto it = sigma.find(v); it != sigma.end()) {
      const std::string& img = it->second;
      if (static_cast<int>(acc.size() + img.size()) + replacement_min(ti + 1) > budget) return;
      acc += img;
      self(self, ti + 1, budget, done);
      acc.resize(acc.size() - img.size());
      return;
    }
    if (occ_t.at(v) == 1) {
      // A run of fresh one-shot variables contributes an arbitrary factor of
      // length >= run size; enumerate the factor once, not its splits.
      std::size_t tj = ti;
      std::vector<char> run;
      while (tj < t.size() && occ_t.at(t[tj]) == 1 && !sigma.count(t[tj])) {
        run.push_back(t[tj]);
        ++tj;
      }
      const int k = static_cast<int>(run.size());
      const int cap = budget - static_cast<int>(acc.size()) - replacement_min(tj);
      for (int len = k; len <= cap; ++len) {
        std::string image(static_cast<std::size_t>(len), alphabet[0]);
        std::vector<int> digit(static_cast<std::size_t>(len), 0);
        while (true) {
          if constexpr (WithSigma) assign_split(run, image);
          acc += image;
          self(self, tj, budget, done);
          acc.resize(acc.size() - static_cast<std::size_t>(len));
          if constexpr (WithSigma) unassign(run);
          int p = 0;
          while (p < len && ++digit[static_cast<std::size_t>(p)] ==
                                static_cast<int>(alphabet.size())) {
            digit[static_cast<std::size_t>(p)] = 0;
            image[static_cast<std::size_t>(p)] = alphabet[0];
            ++p;
          }
          if (p == len) break;
          image[static_cast<std::size_t>(p)] =
              alphabet[static_cast<std::size_t>(digit[static_cast<std::size_t>(p)])];
        }
      }
      return;
    }
    // A fresh variable with several occurrences: bind an image, then rerun
    // this position down the bound path.
    for (int len = 1;; ++len) {
      sigma[v] = std::string(static_cast<std::size_t>(len), alphabet[0]);
      if (static_cast<int>(acc.size()) + replacement_min(ti) > budget) {
        sigma.erase(v);
        break;
      }
      std::string image(static_cast<std::size_t>(len), alphabet[0]);
      std::vector<int> digit(static_cast<std::size_t>(len), 0);
      while (true) {
        sigma[v] = image;
        self(self, ti, budget, done);
        int p = 0;
        while (p < len &&
               ++digit[static_cast<std::size_t>(p)] == static_cast<int>(alphabet.size())) {
          digit[static_cast<std::size_t>(p)] = 0;
          image[static_cast<std::size_t>(p)] = alphabet[0];
          ++p;
        }
        if (p == len) break;
        image[static_cast<std::size_t>(p)] =
            alphabet[static_cast<std::size_t>(digit[static_cast<std::size_t>(p)])];
      }
      sigma.erase(v);
    }
  };

  // Matches sigma(s) against w starting at `start`; on success expands.
  auto match = [&](auto&& self, std::size_t ti, std::size_t at, std::size_t start,
                   auto&& on_match) -> void {
    if (ti == tokens.size()) {
      on_match(at);
      return;
    }
    const Token& tok = tokens[ti];
    if (tok.var != 0) {
      if (auto it = sigma.find(tok.var); it != sigma.end()) {
        const std::string& img = it->second;
        if (at + img.size() <= w.size() && w.compare(at, img.size(), img) == 0) {
          self(self, ti + 1, at + img.size(), start, on_match);
        }
        return;
      }
      const int rest = tokens_min(ti + 1);
      const int avail = static_cast<int>(w.size() - at);
      for (int len = 1; len + rest <= avail; ++len) {
        sigma.emplace(tok.var, w.substr(at, static_cast<std::size_t>(len)));
        self(self, ti + 1, at + static_cast<std::size_t>(len), start, on_match);
        sigma.erase(tok.var);
      }
      return;
    }
    const int k = static_cast<int>(tok.gap_vars.size());
    const int rest = tokens_min(ti + 1);
    const int avail = static_cast<int>(w.size() - at);
    for (int len = k; len + rest <= avail; ++len) {
      if constexpr (WithSigma) {
        assign_split(tok.gap_vars, w.substr(at, static_cast<std::size_t>(len)));
      }
      self(self, ti + 1, at + static_cast<std::size_t>(len), start, on_match);
      if constexpr (WithSigma) unassign(tok.gap_vars);
    }
  };

  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    match(match, 0, pos, pos, [&](std::size_t end) {
      const int budget = max_len - static_cast<int>(w.size() - (end - pos));
      if (budget < 1) return;
      expand(expand, 0, budget, [&]() {
        emit(w.substr(0, pos) + acc + w.substr(end), static_cast<int>(pos), sigma);
      });
    });
  }
}

template <bool WithSigma, typename Emit>
void for_each_rewrite(const Identity& rule, bool backwards, const std::string& w, int max_len,
                      const std::string& alphabet, Emit&& emit) {
  const std::string& s = backwards ? rule.rhs.str() : rule.lhs.str();
  const std::string& t = backwards ? rule.lhs.str() : rule.rhs.str();
  rewrite_one_direction<WithSigma>(s, t, w, max_len, alphabet, emit);
}

}  // namespace

std::set<Word> apply_rule(const Identity& rule, const Word& w, int max_len,
                          const std::set<Letter>& alphabet) {
  if (max_len < w.length()) throw std::invalid_argument("max_len below the word's length");
  if (alphabet.empty()) throw std::invalid_argument("empty replacement alphabet");
  const std::string alpha(alphabet.begin(), alphabet.end());
  std::set<Word> out;
  auto emit = [&](const std::string& result, int, const std::map<char, std::string>&) {
    out.insert(Word(result));
  };
  for_each_rewrite<false>(rule, false, w.str(), max_len, alpha, emit);
  if (rule.lhs != rule.rhs) for_each_rewrite<false>(rule, true, w.str(), max_len, alpha, emit);
  return out;
}

std::set<Word> apply_rule(const Identity& rule, const Word& w, int max_len) {
  return apply_rule(rule, w, max_len, std::set<Letter>(w.begin(), w.end()));
}

// --- basis catalog --------------------------------------------------------

namespace {

Basis make_basis(std::string name, std::optional<int> parameter,
                 const std::vector<std::string>& texts, std::string note = "") {
  Basis b;
  b.name = std::move(name);
  b.parameter = parameter;
  for (const std::string& text : texts) b.identities.push_back(parse_identity(text));
  b.note = std::move(note);
  return b;
}

std::vector<std::string> k_basis_texts(int n) {
  std::vector<std::string> texts = {
      "a^2b^2=b^2a^2",
      "a^2=a^" + std::to_string(n + 2),
      "abcd=acbd",
      "abc=ab^" + std::to_string(n + 1) + "c",
  };
  for (int m = 2; m <= n; ++m) {
    if (std::gcd(m, n) > 1) {
      texts.push_back("ab^" + std::to_string(m) + "a=a^" + std::to_string(n + 1) + "b^" +
                      std::to_string(m) + "a");
    }
  }
  return texts;
}

}  // namespace

Basis basis_catalog(const std::string& name, std::optional<int> n) {
  auto need_n = [&] {
    if (!n || *n < 1) throw std::invalid_argument(name + " basis needs a positive n");
    return *n;
  };
  if (name == "A" || name == "N2_1") return make_basis(name, {}, {"x^2=x^3", "xy=yx"});
  if (name == "B") return make_basis(name, {}, {"a^2=bcde", "abc=cba", "aba=bab"});
  if (name == "C_lambda") return make_basis(name, {}, {"a^2=a^3", "a^2b=b^2a", "abc=abc^2"});
  if (name == "C_rho") return make_basis(name, {}, {"a^2=a^3", "ba^2=ab^2", "cba=c^2ba"});
  if (name == "N3") return make_basis(name, {}, {"xyz=w^3", "xy=yx"});
  if (name == "D") return make_basis(name, 1, k_basis_texts(1));
  if (name == "K") {
    int nn = need_n();
    return make_basis(name, nn, k_basis_texts(nn));
  }
  if (name == "F_lambda") return make_basis(name, {}, {"ab=abc"});
  if (name == "F_rho") return make_basis(name, {}, {"ba=cba"});
  if (name == "W_lambda") {
    return make_basis(name, {}, {"a^2=a^3", "aba=ababa", "abc^2d^2=abd^2c^2", "a^2b^2=ab^2a"},
                      "commuting-squares axiom included in its non-trivial form "
                      "abc^2d^2=abd^2c^2");
  }
  if (name == "W_rho") {
    return make_basis(name, {}, {"a^2=a^3", "aba=ababa", "d^2c^2ba=c^2d^2ba", "b^2a^2=ab^2a"},
                      "commuting-squares axiom included in its non-trivial form "
                      "d^2c^2ba=c^2d^2ba");
  }
  if (name == "L2_1") return make_basis(name, {}, {"x=x^2", "xy=xyx"});
  if (name == "R2_1") return make_basis(name, {}, {"x=x^2", "xy=yxy"});
  if (name == "L2") return make_basis(name, {}, {"x=xy"});
  if (name == "R2") return make_basis(name, {}, {"x=yx"});
  if (name == "Y2") return make_basis(name, {}, {"x=x^2", "xy=yx"});
  if (name == "C") {
    int nn = need_n();
    return make_basis(name, nn, {"x=xy^" + std::to_string(nn), "xy=yx"});
  }
  if (name == "N2") return make_basis(name, {}, {"xy=z^2"});
  if (name == "L2vB2") return make_basis(name, {}, {"a^2=a^3", "aba=ababa", "ab^2c^2=ac^2b^2"});
  throw std::invalid_argument("no identity basis recorded for '" + name + "'");
}

// --- bounded derivation ----------------------------------------------------

std::string render(const DerivationTrace& trace) {
  std::ostringstream out;
  std::string prev = render(trace.start);
  if (trace.steps.empty()) out << prev << "  (no steps needed)";
  for (const DerivationStep& step : trace.steps) {
    out << prev << "  --[" << step.rule << (step.backwards ? " reversed" : "") << ", pos "
        << step.position << ", {";
    bool first = true;
    for (const auto& [v, img] : step.substitution) {
      if (!first) out << ", ";
      out << v << "->" << render(img);
      first = false;
    }
    out << "}]-->  " << render(step.result) << '\n';
    prev = render(step.result);
  }
  return out.str();
}

DeriveResult derive_bounded(const Basis& basis, const Identity& id, int max_len,
                            std::size_t max_states) {
  if (max_len < 1 || max_states < 1) throw std::invalid_argument("caps must be positive");
  if (id.lhs.length() > max_len) {
    throw std::invalid_argument("max_len is below the left side's length");
  }
  if (id.trivial()) {
    return {DeriveStatus::kFound, DerivationTrace{id.lhs, {}}, 1};
  }

  std::set<Letter> alphabet(id.lhs.begin(), id.lhs.end());
  alphabet.insert(id.rhs.begin(), id.rhs.end());
  const std::string alpha(alphabet.begin(), alphabet.end());
  const std::string& target = id.rhs.str();

  struct Parent {
    std::string from;
    int rule;
    bool backwards;
    int position;
  };
  std::unordered_map<std::string, Parent> parents;
  std::queue<std::string> queue;
  parents.emplace(id.lhs.str(), Parent{"", -1, false, -1});
  queue.push(id.lhs.str());

  if (id.rhs.length() > max_len) return {DeriveStatus::kNotFound, std::nullopt, 1};

  bool truncated = false;
  bool found = false;
  while (!queue.empty() && !found) {
    const std::string current = std::move(queue.front());
    queue.pop();
    for (int r = 0; r < static_cast<int>(basis.identities.size()) && !found; ++r) {
      const Identity& rule = basis.identities[static_cast<std::size_t>(r)];
      for (int dir = 0; dir < (rule.trivial() ? 1 : 2) && !found; ++dir) {
        auto emit = [&](const std::string& result, int pos, const std::map<char, std::string>&) {
          if (found || parents.count(result)) return;
          if (parents.size() >= max_states) {
            truncated = true;
            return;
          }
          parents.emplace(result, Parent{current, r, dir == 1, pos});
          if (result == target) {
            found = true;
            return;
          }
          queue.push(result);
        };
        for_each_rewrite<false>(rule, dir == 1, current, max_len, alpha, emit);
      }
    }
  }

  if (!found) {
    return {truncated ? DeriveStatus::kBudgetExceeded : DeriveStatus::kNotFound, std::nullopt,
            parents.size()};
  }

  // Walk the parent chain back to the start, recovering each substitution.
  std::vector<std::string> chain;
  for (std::string w = target; !w.empty(); w = parents.at(w).from) chain.push_back(w);
  std::reverse(chain.begin(), chain.end());

  DerivationTrace trace{id.lhs, {}};
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Parent& p = parents.at(chain[i]);
    const Identity& rule = basis.identities[static_cast<std::size_t>(p.rule)];
    DerivationStep step{render(rule), p.backwards, p.position, {}, Word(chain[i])};
    bool captured = false;
    auto emit = [&](const std::string& result, int pos, const std::map<char, std::string>& sig) {
      if (captured || result != chain[i] || pos != p.position) return;
      for (const auto& [v, img] : sig) step.substitution.emplace(v, Word(img));
      captured = true;
    };
    for_each_rewrite<true>(rule, p.backwards, chain[i - 1], max_len, alpha, emit);
    if (!captured) throw std::logic_error("failed to replay a derivation step");
    trace.steps.push_back(std::move(step));
  }
  return {DeriveStatus::kFound, trace, parents.size()};
}

// --- whole-ball reachability ------------------------------------------------

DerivationBall::DerivationBall(const Basis& basis, const std::string& letters, int max_len)
    : max_len_(max_len) {
  std::set<Letter> unique(letters.begin(), letters.end());
  letters_.assign(unique.begin(), unique.end());
  if (letters_.empty() || max_len_ < 1) {
    throw std::invalid_argument("ball needs letters and a positive cap");
  }

  const std::size_t k = letters_.size();
  std::size_t total = 0, layer = 1;
  for (int len = 1; len <= max_len_; ++len) {
    layer *= k;
    total += layer;
    if (total > 5'000'000) throw std::invalid_argument("derivation ball too large");
  }
  parent_.resize(total);
  std::iota(parent_.begin(), parent_.end(), 0);

  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };

  std::string w;
  auto walk = [&](auto&& self) -> void {
    if (!w.empty()) {
      const int self_index = index_of(Word(w));
      for (const Identity& rule : basis.identities) {
        for (int dir = 0; dir < (rule.trivial() ? 1 : 2); ++dir) {
          auto emit = [&](const std::string& result, int, const std::map<char, std::string>&) {
            unite(self_index, index_of(Word(result)));
          };
          for_each_rewrite<false>(rule, dir == 1, w, max_len_, letters_, emit);
        }
      }
    }
    if (static_cast<int>(w.size()) == max_len_) return;
    for (char c : letters_) {
      w.push_back(c);
      self(self);
      w.pop_back();
    }
  };
  walk(walk);
}

int DerivationBall::index_of(const Word& u) const {
  if (u.length() > max_len_) throw std::invalid_argument("word outside the ball");
  const std::size_t k = letters_.size();
  // Words of length below l(u) occupy indices 0 .. k + k^2 + ... + k^(l-1) - 1;
  // within one length, words are ordered as base-k numerals.
  std::size_t value = 0, shorter = 0, layer = 1;
  for (int i = 0; i < u.length(); ++i) {
    std::size_t digit = letters_.find(u.at(i));
    if (digit == std::string::npos) throw std::invalid_argument("word uses foreign letters");
    value = value * k + digit;
    shorter += layer;
    layer *= k;
  }
  return static_cast<int>(shorter - 1 + value);
}

int DerivationBall::find(int x) const {
  while (parent_[static_cast<std::size_t>(x)] != x) {
    parent_[static_cast<std::size_t>(x)] =
        parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
    x = parent_[static_cast<std::size_t>(x)];
  }
  return x;
}

bool DerivationBall::connected(const Word& u, const Word& v) const {
  return find(index_of(u)) == find(index_of(v));
}

}  // namespace rsv
