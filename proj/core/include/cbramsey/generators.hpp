#pragma once

#include <cstdint>
#include <random>

#include "cbramsey/graph.hpp"
#include "cbramsey/setfamily.hpp"

namespace cbramsey {

/// Seeded generators for the property corpora.
using Rng = std::mt19937_64;

/// Forest of cliques: each new block has 2..max_block vertices and hangs
/// off a random existing vertex, or starts a new component with
/// probability 1/4. Exactly `order` vertices.
Graph random_block_clique(Rng& rng, int order, int max_block);

/// G(order, q) with q uniform in [0.25, 0.9], resampled until 2-connected.
/// order >= 3.
Graph random_two_connected(Rng& rng, int order);

bool is_two_connected(const Graph& g);

/// `sets` random subsets of [0, universe) with a random inclusion rate.
SetFamily random_family(Rng& rng, int sets, int universe);

}  // namespace cbramsey
