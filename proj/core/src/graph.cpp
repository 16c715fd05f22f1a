#include "cbramsey/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cbramsey/error.hpp"

namespace cbramsey {

namespace {

void check_vertex(int v, int order) {
    if (v < 0 || v >= order)
        throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " not in [0, " + std::to_string(order) + ")");
}

}  // namespace

Graph::Graph(int order) {
    if (order < 0) throw Error(ErrorKind::OutOfRange, "negative order");
    rows_.assign(static_cast<std::size_t>(order), VertexSet(order));
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
    GraphBuilder b(order);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

int Graph::min_degree() const {
    int d = order() == 0 ? 0 : order();
    for (int v = 0; v < order(); ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < order(); ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        for (int v = neighbors(u).next(u + 1); v >= 0; v = neighbors(u).next(v + 1)) out.emplace_back(u, v);
    return out;
}

Graph Graph::complement() const {
    GraphBuilder b(order());
    for (int u = 0; u < order(); ++u)
        for (int v = u + 1; v < order(); ++v)
            if (!adjacent(u, v)) b.add_edge(u, v);
    return std::move(b).build();
}

Graph Graph::induced(std::span<const int> vs) const {
    const int n = static_cast<int>(vs.size());
    for (int v : vs) check_vertex(v, order());
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adjacent(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)])) b.add_edge(i, j);
    return std::move(b).build();
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != order()) throw Error(ErrorKind::InvalidVertex, "permutation size mismatch");
    GraphBuilder b(order());
    for (auto [u, v] : edges()) b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return std::move(b).build();
}

bool Graph::well_formed() const {
    for (int u = 0; u < order(); ++u) {
        if (neighbors(u).capacity() != order()) return false;
        if (adjacent(u, u)) return false;
        bool ok = true;
        neighbors(u).for_each([&](int v) { ok = ok && adjacent(v, u); });
        if (!ok) return false;
    }
    return true;
}

GraphBuilder::GraphBuilder(int order) {
    if (order < 0) throw Error(ErrorKind::OutOfRange, "negative order");
    rows_.assign(static_cast<std::size_t>(order), VertexSet(order));
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
    check_vertex(u, order());
    check_vertex(v, order());
    if (u == v) throw Error(ErrorKind::InvalidVertex, "self-loop at " + std::to_string(u));
    rows_[static_cast<std::size_t>(u)].insert(v);
    rows_[static_cast<std::size_t>(v)].insert(u);
    return *this;
}

GraphBuilder& GraphBuilder::add_clique(std::span<const int> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
    return *this;
}

Graph GraphBuilder::build() && {
    Graph g;
    g.rows_ = std::move(rows_);
    std::size_t twice = 0;
    for (const auto& r : g.rows_) twice += static_cast<std::size_t>(r.count());
    g.edge_count_ = twice / 2;
    return g;
}

Graph GraphBuilder::build() const& {
    GraphBuilder copy(*this);
    return std::move(copy).build();
}

Graph clique(int size) {
    GraphBuilder b(size);
    for (int u = 0; u < size; ++u)
        for (int v = u + 1; v < size; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

Graph edgeless(int size) { return Graph(size); }

Graph cycle_graph(int size) {
    GraphBuilder b(size);
    for (int v = 0; v + 1 < size; ++v) b.add_edge(v, v + 1);
    if (size >= 3) b.add_edge(size - 1, 0);
    return std::move(b).build();
}

Graph path_graph(int size) {
    GraphBuilder b(size);
    for (int v = 0; v + 1 < size; ++v) b.add_edge(v, v + 1);
    return std::move(b).build();
}

Graph complete_bipartite(int a, int b) {
    GraphBuilder gb(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) gb.add_edge(u, v);
    return std::move(gb).build();
}

Graph petersen() {
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return std::move(b).build();
}

Graph disjoint_union(std::span<const Graph> parts) {
    int total = 0;
    for (const auto& p : parts) total += p.order();
    GraphBuilder b(total);
    int offset = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges()) b.add_edge(u + offset, v + offset);
        offset += p.order();
    }
    return std::move(b).build();
}

Graph identify(const Graph& g, std::span<const Edge> pairs) {
    const int n = g.order();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (auto [a, b] : pairs) {
        check_vertex(a, n);
        check_vertex(b, n);
        int ra = find(a), rb = find(b);
        if (ra == rb) continue;
        // Smallest member stays the root so class order is by minimum.
        if (rb < ra) std::swap(ra, rb);
        parent[static_cast<std::size_t>(rb)] = ra;
    }

    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    int classes = 0;
    for (int v = 0; v < n; ++v) {
        const int r = find(v);
        if (r == v) cls[static_cast<std::size_t>(v)] = classes++;
    }
    for (int v = 0; v < n; ++v) cls[static_cast<std::size_t>(v)] = cls[static_cast<std::size_t>(find(v))];

    GraphBuilder b(classes);
    for (auto [u, v] : g.edges()) {
        const int cu = cls[static_cast<std::size_t>(u)], cv = cls[static_cast<std::size_t>(v)];
        if (cu == cv)
            throw Error(ErrorKind::SelfLoopCreated,
                        "adjacent vertices " + std::to_string(u) + " and " + std::to_string(v) + " identified");
        b.add_edge(cu, cv);
    }
    return std::move(b).build();
}

std::vector<int> complement_common_neighbors(const Graph& g, std::span<const int> s) {
    VertexSet covered = g.empty_set();
    for (int u : s) {
        check_vertex(u, g.order());
        covered.insert(u);
        covered |= g.neighbors(u);
    }
    return (~covered).to_vector();
}

std::size_t for_each_independent_set(const Graph& g, int size,
                                     const std::function<bool(std::span<const int>)>& visit) {
    if (size < 0) return 0;
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(size));
    if (size == 0) {
        visit(chosen);
        return 1;
    }
    if (size > g.order()) return 0;

    // cand[d]: vertices still selectable after d choices.
    std::vector<VertexSet> cand(static_cast<std::size_t>(size) + 1, g.empty_set());
    cand[0] = g.vertices();
    std::size_t visited = 0;
    bool stop = false;

    std::function<void(int)> rec = [&](int depth) {
        const VertexSet& here = cand[static_cast<std::size_t>(depth)];
        for (int v = here.first(); v >= 0 && !stop; v = here.next(v + 1)) {
            chosen.push_back(v);
            if (depth + 1 == size) {
                ++visited;
                if (!visit(chosen)) stop = true;
            } else {
                VertexSet& nxt = cand[static_cast<std::size_t>(depth) + 1];
                nxt = here;
                nxt -= g.neighbors(v);
                nxt.erase_through(v);
                if (nxt.count() >= size - depth - 1) rec(depth + 1);
            }
            chosen.pop_back();
        }
    };
    rec(0);
    return visited;
}

std::vector<std::vector<int>> independent_sets(const Graph& g, int size) {
    std::vector<std::vector<int>> out;
    for_each_independent_set(g, size, [&](std::span<const int> s) {
        out.emplace_back(s.begin(), s.end());
        return true;
    });
    return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> out;
    VertexSet seen = g.empty_set();
    for (int s = 0; s < g.order(); ++s) {
        if (seen.contains(s)) continue;
        std::vector<int> comp{s};
        seen.insert(s);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            VertexSet fresh = g.neighbors(comp[i]) - seen;
            fresh.for_each([&](int w) {
                seen.insert(w);
                comp.push_back(w);
            });
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

RootedBlocks rooted_blocks(const Graph& g, const VertexSet& mask, int root) {
    const auto n = static_cast<std::size_t>(g.order());
    RootedBlocks rb;
    rb.parent.assign(n, -1);
    rb.edge_block.assign(n, -1);
    rb.reached = g.empty_set();

    std::vector<int> disc(n, -1), low(n, 0), cursor(n, 0);
    std::vector<int> frames, vstack;
    int clock = 0;

    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = clock++;
    rb.reached.insert(root);
    frames.push_back(root);
    vstack.push_back(root);

    while (!frames.empty()) {
        const int u = frames.back();
        const auto ui = static_cast<std::size_t>(u);
        int w = g.neighbors(u).next(cursor[ui]);
        while (w >= 0 && !mask.contains(w)) w = g.neighbors(u).next(w + 1);
        if (w >= 0) {
            cursor[ui] = w + 1;
            const auto wi = static_cast<std::size_t>(w);
            if (disc[wi] < 0) {
                rb.parent[wi] = u;
                disc[wi] = low[wi] = clock++;
                rb.reached.insert(w);
                frames.push_back(w);
                vstack.push_back(w);
            } else if (w != rb.parent[ui]) {
                low[ui] = std::min(low[ui], disc[wi]);
            }
            continue;
        }
        frames.pop_back();
        if (frames.empty()) break;
        const int p = frames.back();
        const auto pi = static_cast<std::size_t>(p);
        low[pi] = std::min(low[pi], low[ui]);
        if (low[ui] >= disc[pi]) {
            const int id = static_cast<int>(rb.blocks.size());
            std::vector<int> block;
            while (true) {
                const int x = vstack.back();
                vstack.pop_back();
                rb.edge_block[static_cast<std::size_t>(x)] = id;
                block.push_back(x);
                if (x == u) break;
            }
            block.push_back(p);
            std::sort(block.begin(), block.end());
            rb.blocks.push_back(std::move(block));
        }
    }
    return rb;
}

BlockDecomposition blocks(const Graph& g) {
    BlockDecomposition out;
    const VertexSet all = g.vertices();
    VertexSet seen = g.empty_set();
    std::vector<int> membership(static_cast<std::size_t>(g.order()), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (seen.contains(s)) continue;
        RootedBlocks rb = rooted_blocks(g, all, s);
        seen |= rb.reached;
        if (rb.blocks.empty()) {
            out.blocks.push_back({s});
            continue;
        }
        for (auto& b : rb.blocks) out.blocks.push_back(std::move(b));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    for (const auto& b : out.blocks)
        for (int v : b) ++membership[static_cast<std::size_t>(v)];
    for (int v = 0; v < g.order(); ++v)
        if (membership[static_cast<std::size_t>(v)] > 1) out.cut_vertices.push_back(v);
    return out;
}

bool is_clique(const Graph& g, std::span<const int> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

bool is_block_clique(const Graph& g) {
    for (const auto& b : blocks(g).blocks)
        if (!is_clique(g, b)) return false;
    return true;
}

}  // namespace cbramsey
