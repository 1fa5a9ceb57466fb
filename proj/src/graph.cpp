#include "uberdh/graph.hpp"

#include <bit>
#include <stdexcept>

namespace uberdh {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("bad graph edge");
  adj_[static_cast<std::size_t>(u)] |= 1ULL << v;
  adj_[static_cast<std::size_t>(v)] |= 1ULL << u;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto row : adj_) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

bool Graph::is_connected_on(std::uint64_t subset) const {
  if (subset == 0) return true;
  std::uint64_t seen = subset & (~subset + 1);
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
    next &= subset & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == subset;
}

bool Graph::is_connected() const {
  return is_connected_on(n_ == 64 ? ~0ULL : ((1ULL << n_) - 1));
}

namespace {

void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // pivot with the most neighbours in p
  int pivot = -1, best = -1;
  for (std::uint64_t ux = p | x; ux != 0; ux &= ux - 1) {
    const int u = std::countr_zero(ux);
    const int c = std::popcount(p & g.neighbours(u));
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (std::uint64_t cand = p & ~g.neighbours(pivot); cand != 0; cand &= cand - 1) {
    const int v = std::countr_zero(cand);
    const std::uint64_t bit = 1ULL << v;
    bron_kerbosch(g, r | bit, p & g.neighbours(v), x & g.neighbours(v), out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

std::vector<std::uint64_t> Graph::maximal_cliques() const {
  std::vector<std::uint64_t> out;
  if (n_ == 0) return out;
  bron_kerbosch(*this, 0, n_ == 64 ? ~0ULL : ((1ULL << n_) - 1), 0, out);
  return out;
}

bool Graph::is_chordal() const {
  std::vector<int> order;
  std::vector<int> weight(static_cast<std::size_t>(n_), 0);
  std::uint64_t numbered = 0;
  for (int step = 0; step < n_; ++step) {
    int pick = -1;
    for (int v = 0; v < n_; ++v) {
      if ((numbered >> v) & 1ULL) continue;
      if (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]) pick = v;
    }
    order.push_back(pick);
    numbered |= 1ULL << pick;
    for (std::uint64_t nb = adj_[static_cast<std::size_t>(pick)] & ~numbered; nb != 0; nb &= nb - 1)
      ++weight[static_cast<std::size_t>(std::countr_zero(nb))];
  }
  // Earlier neighbours of each vertex, minus the latest of them, must be
  // adjacent to that latest one.
  std::vector<int> position(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  std::uint64_t before = 0;
  for (int v : order) {
    const std::uint64_t earlier = adj_[static_cast<std::size_t>(v)] & before;
    if (earlier != 0) {
      int latest = -1;
      for (std::uint64_t e = earlier; e != 0; e &= e - 1) {
        const int u = std::countr_zero(e);
        if (latest < 0 || position[static_cast<std::size_t>(u)] > position[static_cast<std::size_t>(latest)]) latest = u;
      }
      const std::uint64_t rest = earlier & ~(1ULL << latest);
      if ((rest & ~adj_[static_cast<std::size_t>(latest)]) != 0) return false;
    }
    before |= 1ULL << v;
  }
  return true;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace uberdh
