#include "cbramsey/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "cbramsey/error.hpp"
#include "cbramsey/graph_io.hpp"
#include "cbramsey/verify.hpp"

namespace cbramsey::oracle {

namespace {

constexpr int kMaxIsoOrder = 8;
constexpr int kMaxLabeledOrder = 6;
constexpr int kMaxMaskOrder = 20;

using Masks = std::vector<std::uint32_t>;

Masks masks_of(const Graph& g) {
    Masks adj(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v)
        g.neighbors(v).for_each([&](int w) { adj[static_cast<std::size_t>(v)] |= 1U << w; });
    return adj;
}

// Path DP over vertex subsets: a cycle of length m through its lowest vertex.
std::vector<int> cycle_by_subsets(const Masks& adj, int m) {
    const int n = static_cast<int>(adj.size());
    for (int s = 0; s + m <= n; ++s) {
        const std::uint32_t above = ((1U << n) - 1U) & ~((2U << s) - 1U);
        // layer[i]: (mask, end) pairs for paths from s on i+1 vertices, with a parent link.
        struct State {
            std::uint32_t mask;
            int end;
            int parent;
        };
        std::vector<std::vector<State>> layers(1, {{1U << s, s, -1}});
        std::set<std::pair<std::uint32_t, int>> seen;
        for (int len = 1; len < m; ++len) {
            std::vector<State> next;
            const auto& cur = layers.back();
            for (int i = 0; i < static_cast<int>(cur.size()); ++i) {
                std::uint32_t cand = adj[static_cast<std::size_t>(cur[static_cast<std::size_t>(i)].end)] & above &
                                     ~cur[static_cast<std::size_t>(i)].mask;
                while (cand) {
                    const int w = std::countr_zero(cand);
                    cand &= cand - 1;
                    const std::uint32_t mask = cur[static_cast<std::size_t>(i)].mask | (1U << w);
                    if (seen.emplace(mask, w).second) next.push_back({mask, w, i});
                }
            }
            if (next.empty()) break;
            layers.push_back(std::move(next));
        }
        if (static_cast<int>(layers.size()) < m) continue;
        const auto& last = layers.back();
        for (int i = 0; i < static_cast<int>(last.size()); ++i) {
            if (!(adj[static_cast<std::size_t>(last[static_cast<std::size_t>(i)].end)] >> s & 1U)) continue;
            std::vector<int> cycle;
            int idx = i;
            for (int layer = m - 1; layer >= 0; --layer) {
                const State& st = layers[static_cast<std::size_t>(layer)][static_cast<std::size_t>(idx)];
                cycle.push_back(st.end);
                idx = st.parent;
            }
            std::reverse(cycle.begin(), cycle.end());
            return cycle;
        }
    }
    return {};
}

// Independent k-set whose common non-neighbourhood has at least n vertices.
struct BookHunt {
    const Graph& g;
    int n;
    int k;
    std::vector<int> spine;

    bool descend(const VertexSet& common, int from) {
        const int have = static_cast<int>(spine.size());
        if (have == k) return common.count() >= n;
        if (common.count() < n + (k - have)) return false;
        for (int v = common.next(from); v >= 0; v = common.next(v + 1)) {
            VertexSet next = common;
            next -= g.neighbors(v);
            next.erase(v);
            spine.push_back(v);
            if (descend(next, v + 1)) return true;
            spine.pop_back();
        }
        return false;
    }
};

std::string bits_key(const Graph& g, const std::vector<int>& perm) {
    return to_graph6(g.induced(perm));
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.order();
    if (n == 0) return {to_graph6(g), {}};

    // Vertices with equal open or closed neighbourhoods are interchangeable.
    std::vector<int> twin_rep(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        twin_rep[static_cast<std::size_t>(v)] = v;
        for (int u = 0; u < v; ++u) {
            VertexSet nu = g.neighbors(u), nv = g.neighbors(v);
            nu.erase(v);
            nv.erase(u);
            if (nu == nv) {
                twin_rep[static_cast<std::size_t>(v)] = twin_rep[static_cast<std::size_t>(u)];
                break;
            }
        }
    }

    std::vector<std::vector<int>> prefixes;
    for (int v = 0; v < n; ++v)
        if (twin_rep[static_cast<std::size_t>(v)] == v) prefixes.push_back({v});

    for (int pos = 1; pos < n; ++pos) {
        std::vector<std::vector<int>> next;
        std::vector<bool> best_column;
        for (const auto& pre : prefixes) {
            std::vector<bool> used(static_cast<std::size_t>(n), false);
            for (int v : pre) used[static_cast<std::size_t>(v)] = true;
            std::vector<bool> tried_class(static_cast<std::size_t>(n), false);
            for (int v = 0; v < n; ++v) {
                if (used[static_cast<std::size_t>(v)]) continue;
                // Among unused twins only the first needs trying.
                const int rep = twin_rep[static_cast<std::size_t>(v)];
                if (tried_class[static_cast<std::size_t>(rep)]) continue;
                tried_class[static_cast<std::size_t>(rep)] = true;
                std::vector<bool> column(static_cast<std::size_t>(pos));
                for (int i = 0; i < pos; ++i) column[static_cast<std::size_t>(i)] = g.adjacent(pre[static_cast<std::size_t>(i)], v);
                if (next.empty() || column < best_column) {
                    best_column = column;
                    next.clear();
                } else if (column != best_column) {
                    continue;
                }
                auto ext = pre;
                ext.push_back(v);
                next.push_back(std::move(ext));
            }
        }
        prefixes = std::move(next);
    }
    CanonicalForm out;
    out.labeling = prefixes.front();
    out.key = bits_key(g, out.labeling);
    return out;
}

std::vector<Graph> nonisomorphic_graphs(int order) {
    if (order < 0 || order > kMaxIsoOrder)
        throw Error(ErrorKind::ResourceLimit, "isomorphism-class enumeration is limited to order <= 8");
    std::set<std::string> level{to_graph6(Graph(0))};
    for (int size = 1; size <= order; ++size) {
        std::set<std::string> next;
        for (const auto& key : level) {
            const Graph parent = from_graph6(key);
            for (std::uint32_t nbrs = 0; nbrs < (1U << (size - 1)); ++nbrs) {
                GraphBuilder b(size);
                for (auto [u, v] : parent.edges()) b.add_edge(u, v);
                for (int u = 0; u < size - 1; ++u)
                    if (nbrs >> u & 1U) b.add_edge(u, size - 1);
                next.insert(canonical_form(std::move(b).build()).key);
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (const auto& key : level) out.push_back(from_graph6(key));
    return out;
}

void for_each_labeled_graph(int order, const std::function<void(const Graph&)>& visit) {
    if (order < 0 || order > kMaxLabeledOrder)
        throw Error(ErrorKind::ResourceLimit, "labelled enumeration is limited to order <= 6");
    std::vector<Edge> pairs;
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    const std::uint32_t total = 1U << pairs.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        GraphBuilder b(order);
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (mask >> e & 1U) b.add_edge(pairs[e].first, pairs[e].second);
        visit(std::move(b).build());
    }
}

ArrowResult arrows(const Graph& g, int m, int n, int k) {
    if (m < 3 || n < 1 || k < 1) throw Error(ErrorKind::OutOfRange, "need m >= 3, n >= 1, k >= 1");
    ArrowResult r;
    if (m <= g.order()) {
        r.cycle = g.order() <= kMaxMaskOrder ? cycle_by_subsets(masks_of(g), m) : has_cycle_of_length(g, m).cycle;
        if (!r.cycle.empty()) {
            r.arrows = true;
            r.reason = "cycle";
            return r;
        }
    }
    BookHunt hunt{g, n, k, {}};
    if (hunt.descend(g.vertices(), 0)) {
        r.arrows = true;
        r.reason = "book";
        r.book_spine = hunt.spine;
        VertexSet pages = g.vertices();
        for (int v : hunt.spine) {
            pages -= g.neighbors(v);
            pages.erase(v);
        }
        r.book_pages = pages.to_vector();
    }
    return r;
}

ExhaustiveResult ramsey_exhaustive(int m, int n, int k, int N, const EnumerationOptions& opts) {
    if (N < 1) throw Error(ErrorKind::OutOfRange, "N must be >= 1");
    ExhaustiveResult res;
    std::optional<std::string> least;
    auto consider = [&](const Graph& g) {
        if (++res.graphs_examined > opts.budget)
            throw Error(ErrorKind::ResourceLimit, "enumeration budget exhausted at N = " + std::to_string(N));
        if (arrows(g, m, n, k).arrows) return;
        std::string key = canonical_form(g).key;
        if (!least || key < *least) least = std::move(key);
    };
    if (opts.up_to_isomorphism) {
        res.mode = "isomorphism-classes";
        for (const auto& g : nonisomorphic_graphs(N)) consider(g);
    } else {
        res.mode = "labeled";
        for_each_labeled_graph(N, consider);
    }
    res.all_arrow = !least;
    if (least) res.counterexample = from_graph6(*least);
    return res;
}

TinyRamsey ramsey_number_tiny(int m, int n, int k, int n_max, const EnumerationOptions& opts) {
    TinyRamsey out;
    for (int N = 1; N <= n_max; ++N) {
        out.scan.push_back(ramsey_exhaustive(m, n, k, N, opts));
        if (out.scan.back().all_arrow) {
            out.value = N;
            out.lower_bound = N;
            return out;
        }
    }
    out.lower_bound = n_max + 1;
    return out;
}

nlohmann::ordered_json scan_entry_json(int m, int n, int k, int N, const ExhaustiveResult& r) {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["n"] = n;
    j["k"] = k;
    j["N"] = N;
    j["verdict"] = r.all_arrow ? "ALL_ARROW" : "COUNTEREXAMPLE";
    if (r.counterexample) j["counterexample"] = to_graph6(*r.counterexample);
    return j;
}

}  // namespace cbramsey::oracle
