#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cbramsey/formula.hpp"
#include "cbramsey/graph.hpp"

namespace cbramsey {

enum class WitnessFamily { DisjointCliques, Flower, GammaAbc, GammaK, Gamma3, Gamma3Prime, Extended };

std::string_view to_string(WitnessFamily family);

/// Several copies of K_{p+1} sharing one common vertex. One petal is a
/// plain K_{p+1}.
struct ClusterSpec {
    int petals = 1;
};

/// Disjoint union of clusters on K_{p+1} petals, `singles` further K_{p+1}
/// and `small` copies of K_p, laid out in that order.
struct GammaLayout {
    std::vector<ClusterSpec> clusters;
    int singles = 0;
    int small = 0;
    int p = 1;

    int order() const;
    /// Sum over clusters of (petals - 1).
    int duplication() const;
};

struct WitnessSpec {
    WitnessFamily family = WitnessFamily::DisjointCliques;
    /// Free parameters of the family, including the layout for Gamma types.
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::int64_t claimed_order = 0;
    /// Certified lower bound on |N(u_1) ∪ ... ∪ N(u_k)| over independent k-sets.
    std::int64_t claimed_min_union = 0;
    /// C_j-freeness is claimed for j = claimed_cm_free_up_to.
    std::int64_t claimed_cm_free_up_to = 0;
    /// Book size the min-union claim refers to.
    int k = 1;
    /// Sum of maximal clique sizes minus order.
    std::int64_t declared_duplication = 0;
    /// "direct", "paper" or "generalized" (Gamma_k only).
    std::string assembly = "direct";
    std::vector<std::string> notes;
    /// Present for Gamma-type witnesses.
    std::optional<GammaLayout> layout;
};

struct Witness {
    Graph graph;
    WitnessSpec spec;
};

Witness disjoint_cliques(int count, int size, int k = 1);

/// K_center with `attached` copies of K_leaf each sharing one distinct
/// center vertex (center vertices 0..attached-1), then `extra` disjoint K_leaf.
/// Throws AttachOverflow when attached > center.
Witness flower(int center, int attached, int leaf, int extra, int k = 1);

Witness gamma_abc(std::span<const ClusterSpec> clusters, int b, int c, int p, int k = 1);
Witness gamma_from_layout(const GammaLayout& layout, int k, WitnessFamily family);

/// Exact min |∪N(u_i)| over independent k-sets of a Gamma-type layout:
/// k(p-1) plus the fewest clusters/singles that can host the picks not
/// absorbed by K_p copies. Throws NoIndependentSet when k picks do not fit.
std::int64_t gamma_min_union(const GammaLayout& layout, int k);

/// Exact min |∪N(u_i)| for flower(center, attached, leaf, extra).
std::int64_t flower_min_union(int center, int attached, int leaf, int extra, int k);

/// CaseIII cluster assembly for k >= 4 with r_k <= r.
Witness gamma_k(const ParamContext& ctx, std::int64_t ell);
Witness gamma_3(const ParamContext& ctx);
Witness gamma_3_prime(const ParamContext& ctx);

/// Disjoint union with one K_p; the min-union claim grows by p - 1.
Witness extend_with_kp(const Witness& base, int p);

/// Order gk(ctx).g - 1 witness for any valid context.
Witness lower_bound_witness(const ParamContext& ctx);

nlohmann::ordered_json to_json(const WitnessSpec& spec);
WitnessSpec witness_spec_from_json(const nlohmann::json& j);

struct BundlePaths {
    std::filesystem::path graph6;
    std::filesystem::path spec;
};

/// Writes <dir>/<name>.g6 and <dir>/<name>.json. Throws std::runtime_error on I/O failure.
BundlePaths write_bundle(const Witness& w, const std::filesystem::path& dir, const std::string& name);

}  // namespace cbramsey
