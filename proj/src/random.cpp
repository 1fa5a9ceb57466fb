#include "uberdh/random.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "uberdh/errors.hpp"

namespace uberdh {

SimplicialComplex random_complex(int m, Rng& rng) {
  if (m < 1) throw InputError("random complex needs at least one vertex");
  std::uniform_int_distribution<int> count(1, 2 * m);
  std::uniform_int_distribution<int> size(1, std::max(1, std::min(m, 4)));
  std::vector<VertexSet> facets;
  const int n = count(rng);
  for (int f = 0; f < n; ++f) {
    std::vector<int> pool(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v) pool[static_cast<std::size_t>(v)] = v;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(size(rng)));
    facets.push_back(VertexSet::of(pool));
  }
  VertexSet covered;
  for (VertexSet f : facets) covered = covered | f;
  for (int v : (VertexSet::full(m) - covered).vertices()) facets.push_back(VertexSet::single(v));
  return SimplicialComplex::from_facet_sets(m, std::move(facets));
}

SimplicialComplex random_connected_nonsimplex(int m, Rng& rng) {
  if (m < 3) throw InputError("a connected non-simplex needs at least 3 vertices");
  for (;;) {
    SimplicialComplex k = random_complex(m, rng);
    if (is_connected(k) && !is_simplex(k)) return k;
  }
}

Graph random_chordal_graph(int n, Rng& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    Graph sub(v);
    for (auto [a, b] : g.edges()) sub.add_edge(a, b);
    const auto cliques = sub.maximal_cliques();
    std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
    const std::uint64_t clique = cliques[pick(rng)];
    std::uint64_t subset = 0;
    while (subset == 0) {
      subset = clique & rng();
    }
    for (std::uint64_t s = subset; s != 0; s &= s - 1) g.add_edge(v, std::countr_zero(s));
  }
  return g;
}

}  // namespace uberdh
