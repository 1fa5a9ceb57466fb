#pragma once

#include <cstdint>
#include <random>

#include "uberdh/complex.hpp"
#include "uberdh/graph.hpp"

namespace uberdh {

using Rng = std::mt19937_64;

/// Random complex on m vertices without ghost vertices: a handful of random
/// facets, then singletons for any uncovered vertex.
SimplicialComplex random_complex(int m, Rng& rng);

/// Rejection sampling for a connected complex that is not a simplex (m >= 3).
SimplicialComplex random_connected_nonsimplex(int m, Rng& rng);

/// Connected chordal graph: each new vertex is joined to a nonempty subset
/// of a maximal clique of the graph built so far.
Graph random_chordal_graph(int n, Rng& rng);

}  // namespace uberdh
