#include "cbramsey/generators.hpp"

#include <numeric>

#include "cbramsey/error.hpp"

namespace cbramsey {

Graph random_block_clique(Rng& rng, int order, int max_block) {
    if (order < 1 || max_block < 2) throw Error(ErrorKind::OutOfRange, "need order >= 1, max_block >= 2");
    GraphBuilder b(order);
    int placed = 1;
    std::uniform_int_distribution<int> coin(0, 3);
    while (placed < order) {
        const int size = std::uniform_int_distribution<int>(2, max_block)(rng);
        const int fresh = std::min(size - 1, order - placed);
        std::vector<int> block;
        if (coin(rng) == 0) {
            // New component: its first vertex is fresh too.
            block.push_back(placed++);
            for (int i = 1; i < fresh && placed < order; ++i) block.push_back(placed++);
        } else {
            block.push_back(std::uniform_int_distribution<int>(0, placed - 1)(rng));
            for (int i = 0; i < fresh; ++i) block.push_back(placed++);
        }
        b.add_clique(block);
    }
    return std::move(b).build();
}

bool is_two_connected(const Graph& g) {
    if (g.order() < 3) return false;
    const auto bd = blocks(g);
    return bd.blocks.size() == 1 && static_cast<int>(bd.blocks.front().size()) == g.order();
}

Graph random_two_connected(Rng& rng, int order) {
    if (order < 3) throw Error(ErrorKind::OutOfRange, "a 2-connected graph needs at least 3 vertices");
    std::uniform_real_distribution<double> rate(0.25, 0.9);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    while (true) {
        const double q = rate(rng);
        GraphBuilder b(order);
        for (int j = 1; j < order; ++j)
            for (int i = 0; i < j; ++i)
                if (unit(rng) < q) b.add_edge(i, j);
        Graph g = std::move(b).build();
        if (is_two_connected(g)) return g;
    }
}

SetFamily random_family(Rng& rng, int sets, int universe) {
    if (sets < 0 || universe < 1) throw Error(ErrorKind::OutOfRange, "need sets >= 0, universe >= 1");
    const double q = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::vector<int>> raw(static_cast<std::size_t>(sets));
    for (auto& s : raw)
        for (int x = 0; x < universe; ++x)
            if (unit(rng) < q) s.push_back(x);
    return SetFamily(std::move(raw));
}

}  // namespace cbramsey
