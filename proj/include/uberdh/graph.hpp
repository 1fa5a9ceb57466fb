#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace uberdh {

/// Simple undirected graph on at most 64 vertices, adjacency as bitmask rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {}
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1ULL; }
  std::uint64_t neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  /// True iff the subgraph induced on `subset` is connected (the empty set
  /// counts as connected).
  bool is_connected_on(std::uint64_t subset) const;
  bool is_connected() const;

  /// Maximal cliques (Bron-Kerbosch with pivoting), as bitmasks.
  std::vector<std::uint64_t> maximal_cliques() const;

  /// Chordality via maximum cardinality search and a perfect elimination check.
  bool is_chordal() const;

  static Graph complete(int n);
  static Graph cycle(int n);

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

}  // namespace uberdh
