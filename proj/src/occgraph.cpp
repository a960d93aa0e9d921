#include "rsv/occgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rsv {

OccurrenceGraph::OccurrenceGraph(const Word& u) {
  for (Letter x : u) letters_.insert(x);
  letter_list_.assign(letters_.begin(), letters_.end());
  for (const auto& [x, y] : adjacent_pairs(u)) edges_.emplace(x, y);

  // Vertices are indexed (letter, 0) first, then (letter, 1).
  const int m = static_cast<int>(letter_list_.size());
  std::vector<int> parent(static_cast<std::size_t>(2 * m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  std::map<Letter, int> pos;
  for (int i = 0; i < m; ++i) pos[letter_list_[static_cast<std::size_t>(i)]] = i;
  for (const auto& [x, y] : edges_) {
    int a = find(pos.at(x));
    int b = find(pos.at(y) + m);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }

  root_.resize(static_cast<std::size_t>(2 * m));
  std::map<int, std::vector<GraphVertex>> blocks;
  for (int i = 0; i < 2 * m; ++i) {
    root_[static_cast<std::size_t>(i)] = find(i);
    blocks[root_[static_cast<std::size_t>(i)]].push_back(
        {letter_list_[static_cast<std::size_t>(i % m)], i / m});
  }
  for (auto& [r, block] : blocks) {
    std::sort(block.begin(), block.end());
    components_.push_back(std::move(block));
  }
  std::sort(components_.begin(), components_.end());
}

int OccurrenceGraph::vertex_index(GraphVertex v) const {
  auto it = std::lower_bound(letter_list_.begin(), letter_list_.end(), v.first);
  if (it == letter_list_.end() || *it != v.first || (v.second != 0 && v.second != 1)) {
    throw std::invalid_argument(std::string("vertex (") + v.first + "," +
                                std::to_string(v.second) + ") is not in the graph");
  }
  return static_cast<int>(it - letter_list_.begin()) +
         v.second * static_cast<int>(letter_list_.size());
}

bool OccurrenceGraph::same_component(GraphVertex a, GraphVertex b) const {
  return root_[static_cast<std::size_t>(vertex_index(a))] ==
         root_[static_cast<std::size_t>(vertex_index(b))];
}

OccurrenceGraph build_graph(const Word& u) { return OccurrenceGraph(u); }

bool same_components(const Word& u, const Word& v) {
  OccurrenceGraph gu(u), gv(v);
  if (gu.letters() != gv.letters()) return false;
  return gu.components() == gv.components();
}

}  // namespace rsv
