#pragma once

#include <set>
#include <utility>
#include <vector>

#include "rsv/word.hpp"

namespace rsv {

/// A vertex of the occurrence graph: (letter, side) with side 0 for "as left
/// neighbour" and side 1 for "as right neighbour".
using GraphVertex = std::pair<Letter, int>;

/// The bipartite graph on C(u) x {0,1} with an edge (x,0)-(y,1) for every
/// adjacent pair xy of u, together with its connected-component partition.
/// Immutable after construction.
class OccurrenceGraph {
 public:
  explicit OccurrenceGraph(const Word& u);

  const std::set<Letter>& letters() const { return letters_; }

  /// Edge (x,y) stands for the undirected edge between (x,0) and (y,1).
  const std::set<std::pair<Letter, Letter>>& edges() const { return edges_; }

  /// Component blocks as sorted vertex lists, sorted between themselves;
  /// partition equality is plain equality of this value.
  const std::vector<std::vector<GraphVertex>>& components() const { return components_; }

  /// Throws std::invalid_argument when either vertex is not in the graph.
  bool same_component(GraphVertex a, GraphVertex b) const;

 private:
  int vertex_index(GraphVertex v) const;

  std::set<Letter> letters_;
  std::set<std::pair<Letter, Letter>> edges_;
  std::vector<Letter> letter_list_;
  std::vector<int> root_;  // fully compressed component roots
  std::vector<std::vector<GraphVertex>> components_;
};

OccurrenceGraph build_graph(const Word& u);

/// True iff C(u) = C(v) and the two graphs induce the same partition of
/// C(u) x {0,1}; a content mismatch yields false rather than an error.
bool same_components(const Word& u, const Word& v);

}  // namespace rsv
