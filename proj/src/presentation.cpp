#include "rsv/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace rsv {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

FiniteSemigroup from_presentation(const Presentation& p) {
  const int cap = p.closure_cap;
  if (cap < 1) throw std::invalid_argument("closure cap must be positive");
  if (p.generators.empty()) throw std::invalid_argument("presentation has no generators");

  const std::set<Letter> gens(p.generators.begin(), p.generators.end());
  for (const Relation& r : p.relations) {
    for (const Word* side : {&r.lhs, r.rhs ? &*r.rhs : nullptr}) {
      if (!side) continue;
      if (side->length() > cap) {
        throw std::invalid_argument("closure cap is below a relation's length");
      }
      for (Letter x : *side) {
        if (!gens.count(x)) {
          throw std::invalid_argument(std::string("relation uses letter '") + x +
                                      "' that is not a generator");
        }
      }
    }
  }

  // All nonempty words over the generators, shortest first.
  std::vector<std::string> words;
  std::unordered_map<std::string, int> index;
  {
    std::vector<std::string> layer;
    for (Letter g : p.generators) layer.push_back(std::string(1, g));
    for (int len = 1; len <= cap; ++len) {
      std::vector<std::string> next;
      for (const std::string& w : layer) {
        index.emplace(w, static_cast<int>(words.size()));
        words.push_back(w);
        if (len < cap) {
          for (Letter g : p.generators) next.push_back(w + g);
        }
      }
      layer = std::move(next);
    }
  }

  const int zero_node = static_cast<int>(words.size());
  UnionFind uf(zero_node + 1);
  bool zero_used = false;

  // Single rewriting steps, both orientations, plus zero absorption.
  for (int wi = 0; wi < zero_node; ++wi) {
    const std::string& w = words[static_cast<std::size_t>(wi)];
    for (const Relation& r : p.relations) {
      auto rewrite = [&](const std::string& from, const std::string* to) {
        for (std::size_t pos = w.find(from); pos != std::string::npos;
             pos = w.find(from, pos + 1)) {
          if (!to) {
            uf.unite(wi, zero_node);
            zero_used = true;
          } else {
            std::string out = w.substr(0, pos) + *to + w.substr(pos + from.size());
            if (static_cast<int>(out.size()) <= cap) uf.unite(wi, index.at(out));
          }
        }
      };
      const std::string& lhs = r.lhs.str();
      if (r.rhs) {
        const std::string& rhs = r.rhs->str();
        rewrite(lhs, &rhs);
        if (rhs != lhs) rewrite(rhs, &lhs);
      } else {
        rewrite(lhs, nullptr);
      }
    }
  }

  // Enforce that multiplication is well defined on classes: whenever two
  // in-ball words factor through equivalent halves they must be identified.
  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::pair<int, int>, int> product_class;
    for (int wi = 0; wi < zero_node; ++wi) {
      const std::string& w = words[static_cast<std::size_t>(wi)];
      if (w.size() < 2) continue;
      for (std::size_t cut = 1; cut < w.size(); ++cut) {
        int left = uf.find(index.at(w.substr(0, cut)));
        int right = uf.find(index.at(w.substr(cut)));
        int whole = uf.find(wi);
        if (zero_used) {
          int z = uf.find(zero_node);
          if (left == z || right == z) {
            if (whole != z) {
              uf.unite(wi, zero_node);
              changed = true;
            }
            continue;
          }
        }
        auto [it, inserted] = product_class.emplace(std::make_pair(left, right), whole);
        if (!inserted && uf.find(it->second) != whole) {
          uf.unite(it->second, wi);
          changed = true;
        }
      }
    }
  }

  // Collect classes and their shortlex representatives.
  std::map<int, std::string> rep;
  for (int wi = 0; wi < zero_node; ++wi) {
    int root = uf.find(wi);
    const std::string& w = words[static_cast<std::size_t>(wi)];
    auto [it, inserted] = rep.emplace(root, w);
    if (!inserted && shortlex_less(w, it->second)) it->second = w;
  }

  const int zero_root = zero_used ? uf.find(zero_node) : -1;
  std::vector<int> order;  // class roots in presentation order
  std::set<int> placed;
  for (Letter g : p.generators) {
    int root = uf.find(index.at(std::string(1, g)));
    if (root != zero_root && placed.insert(root).second) order.push_back(root);
  }
  {
    std::vector<int> rest;
    for (const auto& [root, r] : rep) {
      if (root != zero_root && !placed.count(root)) rest.push_back(root);
    }
    std::sort(rest.begin(), rest.end(), [&](int a, int b) {
      return shortlex_less(rep.at(a), rep.at(b));
    });
    order.insert(order.end(), rest.begin(), rest.end());
  }
  if (zero_used) order.push_back(zero_root);

  std::map<int, int> class_index;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    class_index[order[static_cast<std::size_t>(i)]] = i;
  }

  FiniteSemigroup s;
  s.name = "presented";
  for (int root : order) {
    s.elements.push_back(root == zero_root ? "0" : rep.at(root));
  }
  if (zero_used) s.zero = static_cast<int>(order.size()) - 1;
  for (Letter g : p.generators) {
    s.generators[g] = class_index.at(uf.find(index.at(std::string(1, g))));
  }

  const int n = static_cast<int>(order.size());
  s.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (zero_used && (i == *s.zero || j == *s.zero)) {
        s.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = *s.zero;
        continue;
      }
      const std::string& a = rep.at(order[static_cast<std::size_t>(i)]);
      const std::string& b = rep.at(order[static_cast<std::size_t>(j)]);
      if (static_cast<int>(a.size() + b.size()) > cap) {
        throw ClosureError("quotient not certifiably closed at cap " + std::to_string(cap) +
                           ": product " + a + "*" + b + " leaves the explored ball");
      }
      s.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          class_index.at(uf.find(index.at(a + b)));
    }
  }

  s.validate();

  // The quotient must actually satisfy the presentation.
  Assignment at_generators;
  for (const auto& [g, idx] : s.generators) at_generators[g] = idx;
  for (const Relation& r : p.relations) {
    int lhs = evaluate(s, r.lhs, at_generators);
    int rhs = r.rhs ? evaluate(s, *r.rhs, at_generators) : *s.zero;
    if (lhs != rhs) {
      throw ClosureError("closure failed to satisfy a relation; raise the cap");
    }
  }
  return s;
}

}  // namespace rsv
