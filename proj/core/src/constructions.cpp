#include "cbramsey/constructions.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>

#include "cbramsey/error.hpp"
#include "cbramsey/graph_io.hpp"

namespace cbramsey {

namespace {

constexpr std::size_t kPartitionBudget = 2'000'000;

std::string str(std::int64_t v) { return std::to_string(v); }

int narrow(std::int64_t v, const char* what) {
    if (v < 0 || v > 1'000'000) throw Error(ErrorKind::OutOfRange, std::string(what) + " out of range: " + str(v));
    return static_cast<int>(v);
}

nlohmann::ordered_json layout_json(const GammaLayout& layout) {
    nlohmann::ordered_json j;
    auto cl = nlohmann::ordered_json::array();
    for (const auto& c : layout.clusters) cl.push_back({{"petals", c.petals}});
    j["clusters"] = std::move(cl);
    j["b"] = layout.singles;
    j["c"] = layout.small;
    j["p"] = layout.p;
    return j;
}

bool is_gamma_family(WitnessFamily f) {
    return f == WitnessFamily::GammaAbc || f == WitnessFamily::GammaK || f == WitnessFamily::Gamma3 ||
           f == WitnessFamily::Gamma3Prime || f == WitnessFamily::Extended;
}

struct CaseIIILevel {
    std::int64_t ell, mu, alpha, r_k;
};

CaseIIILevel level_for(const ParamContext& ctx, std::int64_t ell) {
    if (ell < 1 || ell > ctx.k - 1) throw Error(ErrorKind::OutOfRange, "ell = " + str(ell) + " outside [1, k-1]");
    CaseIIILevel lv;
    lv.ell = ell;
    lv.mu = (ctx.k - 1) / ell;
    lv.alpha = (ctx.k - 1) % ell;
    lv.r_k = ctx.t * ctx.p + ctx.t + ctx.k - ell - ctx.n;
    return lv;
}

void require_sigma_two(const ParamContext& ctx) {
    if (ctx.k != 3) throw Error(ErrorKind::OutOfRange, "needs k = 3");
    if (!ctx.sigma || *ctx.sigma != 2) throw Error(ErrorKind::OutOfRange, "needs sigma = 2 (p + 1 = m - 1)");
}

/// Visits partitions of `total` into exactly `parts` positive parts, each at
/// most `cap`, in descending lexicographic order of the non-increasing
/// part list. Returns false if the visitor stopped the walk.
bool for_each_partition(int total, int parts, int cap, std::vector<int>& prefix,
                        const std::function<bool(const std::vector<int>&)>& visit, std::size_t& budget) {
    if (parts == 0) {
        if (total != 0) return true;
        if (budget == 0) return false;
        --budget;
        return visit(prefix);
    }
    const int hi = std::min(cap, total - (parts - 1));
    const int lo = (total + parts - 1) / parts;
    for (int x = hi; x >= lo; --x) {
        prefix.push_back(x);
        const bool go = for_each_partition(total - x, parts - 1, x, prefix, visit, budget);
        prefix.pop_back();
        if (!go) return false;
    }
    return true;
}

}  // namespace

std::string_view to_string(WitnessFamily family) {
    switch (family) {
        case WitnessFamily::DisjointCliques: return "DISJOINT_CLIQUES";
        case WitnessFamily::Flower: return "FLOWER";
        case WitnessFamily::GammaAbc: return "GAMMA_ABC";
        case WitnessFamily::GammaK: return "GAMMA_K";
        case WitnessFamily::Gamma3: return "GAMMA_3";
        case WitnessFamily::Gamma3Prime: return "GAMMA_3_PRIME";
        case WitnessFamily::Extended: return "EXTENDED";
    }
    return "UNKNOWN";
}

int GammaLayout::order() const {
    int total = singles * (p + 1) + small * p;
    for (const auto& c : clusters) total += c.petals * p + 1;
    return total;
}

int GammaLayout::duplication() const {
    int d = 0;
    for (const auto& c : clusters) d += c.petals - 1;
    return d;
}

Witness disjoint_cliques(int count, int size, int k) {
    if (count < 1 || size < 1) throw Error(ErrorKind::OutOfRange, "disjoint_cliques needs count >= 1, size >= 1");
    GraphBuilder b(count * size);
    std::vector<int> block(static_cast<std::size_t>(size));
    for (int i = 0; i < count; ++i) {
        std::iota(block.begin(), block.end(), i * size);
        b.add_clique(block);
    }
    Witness w{std::move(b).build(), {}};
    w.spec.family = WitnessFamily::DisjointCliques;
    w.spec.parameters = {{"count", count}, {"size", size}};
    w.spec.claimed_order = static_cast<std::int64_t>(count) * size;
    w.spec.k = k;
    w.spec.claimed_min_union = k <= count ? static_cast<std::int64_t>(k) * (size - 1) : 0;
    w.spec.claimed_cm_free_up_to = size + 1;
    return w;
}

std::int64_t flower_min_union(int center, int attached, int leaf, int extra, int k) {
    // Picks: at most one center vertex and one non-shared vertex per leaf.
    // A center pick is dominated by a non-attached center vertex, whose
    // neighbourhood already holds every shared v_i.
    const std::int64_t leaves = attached + extra;
    std::int64_t best = -1;
    if (leaves >= k) best = static_cast<std::int64_t>(k) * (leaf - 1);
    if (center > attached && leaves >= k - 1) {
        const std::int64_t from_attached = std::min<std::int64_t>(k - 1, attached);
        const std::int64_t v = (center - 1) + from_attached * (leaf - 2) + (k - 1 - from_attached) * (leaf - 1);
        if (best < 0 || v < best) best = v;
    }
    if (best < 0) throw Error(ErrorKind::NoIndependentSet, "flower has no independent set of size " + str(k));
    return best;
}

Witness flower(int center, int attached, int leaf, int extra, int k) {
    if (attached > center) throw Error(ErrorKind::AttachOverflow, "attached = " + str(attached) + " > center = " + str(center));
    if (center < 1 || leaf < 2 || extra < 0 || attached < 0)
        throw Error(ErrorKind::OutOfRange, "flower needs center >= 1, leaf >= 2, extra >= 0");
    const int order = center + attached * (leaf - 1) + extra * leaf;
    GraphBuilder b(order);
    std::vector<int> block(static_cast<std::size_t>(center));
    std::iota(block.begin(), block.end(), 0);
    b.add_clique(block);
    int next = center;
    block.assign(static_cast<std::size_t>(leaf), 0);
    for (int i = 0; i < attached; ++i) {
        block[0] = i;
        for (int j = 1; j < leaf; ++j) block[static_cast<std::size_t>(j)] = next++;
        b.add_clique(block);
    }
    for (int i = 0; i < extra; ++i) {
        std::iota(block.begin(), block.end(), next);
        next += leaf;
        b.add_clique(block);
    }
    Witness w{std::move(b).build(), {}};
    w.spec.family = WitnessFamily::Flower;
    w.spec.parameters = {{"center", center}, {"attached", attached}, {"leaf", leaf}, {"extra", extra}};
    w.spec.claimed_order = order;
    w.spec.k = k;
    w.spec.claimed_min_union = flower_min_union(center, attached, leaf, extra, k);
    w.spec.claimed_cm_free_up_to = std::max(center, leaf) + 1;
    w.spec.declared_duplication = attached;
    return w;
}

std::int64_t gamma_min_union(const GammaLayout& layout, int k) {
    const int absorbed = std::min(layout.small, k);
    int rest = k - absorbed;
    std::vector<int> caps;
    for (const auto& c : layout.clusters) caps.push_back(c.petals);
    caps.insert(caps.end(), static_cast<std::size_t>(layout.singles), 1);
    std::sort(caps.rbegin(), caps.rend());
    std::int64_t used = 0;
    for (int c : caps) {
        if (rest <= 0) break;
        rest -= c;
        ++used;
    }
    if (rest > 0) throw Error(ErrorKind::NoIndependentSet, "layout has no independent set of size " + str(k));
    return static_cast<std::int64_t>(k) * (layout.p - 1) + used;
}

Witness gamma_from_layout(const GammaLayout& layout, int k, WitnessFamily family) {
    if (layout.p < 1) throw Error(ErrorKind::OutOfRange, "p must be >= 1");
    for (const auto& c : layout.clusters)
        if (c.petals < 1) throw Error(ErrorKind::OutOfRange, "cluster needs at least one petal");
    if (layout.singles < 0 || layout.small < 0) throw Error(ErrorKind::OutOfRange, "negative clique count");

    const int p = layout.p;
    GraphBuilder b(layout.order());
    std::vector<int> block(static_cast<std::size_t>(p + 1));
    int next = 0;
    for (const auto& c : layout.clusters) {
        const int center = next++;
        block[0] = center;
        for (int i = 0; i < c.petals; ++i) {
            for (int j = 1; j <= p; ++j) block[static_cast<std::size_t>(j)] = next++;
            b.add_clique(block);
        }
    }
    for (int i = 0; i < layout.singles; ++i) {
        std::iota(block.begin(), block.end(), next);
        next += p + 1;
        b.add_clique(block);
    }
    block.resize(static_cast<std::size_t>(p));
    for (int i = 0; i < layout.small; ++i) {
        std::iota(block.begin(), block.end(), next);
        next += p;
        b.add_clique(block);
    }

    Witness w{std::move(b).build(), {}};
    w.spec.family = family;
    w.spec.parameters = layout_json(layout);
    w.spec.claimed_order = layout.order();
    w.spec.k = k;
    w.spec.claimed_min_union = gamma_min_union(layout, k);
    w.spec.claimed_cm_free_up_to = p + 2;
    w.spec.declared_duplication = layout.duplication();
    w.spec.layout = layout;
    return w;
}

Witness gamma_abc(std::span<const ClusterSpec> clusters, int b, int c, int p, int k) {
    GammaLayout layout;
    layout.clusters.assign(clusters.begin(), clusters.end());
    layout.singles = b;
    layout.small = c;
    layout.p = p;
    return gamma_from_layout(layout, k, WitnessFamily::GammaAbc);
}

Witness gamma_k(const ParamContext& ctx, std::int64_t ell) {
    if (ctx.k < 4) throw Error(ErrorKind::OutOfRange, "gamma_k needs k >= 4");
    if (classify(ctx) != CaseKind::CaseIII) throw Error(ErrorKind::OutOfRange, "gamma_k needs CASE_III parameters");
    const CaseIIILevel lv = level_for(ctx, ell);
    if (!within_duplication_bound(lv.r_k, lv.mu, lv.alpha, ctx.t, ctx.k))
        throw Error(ErrorKind::OutOfRange, "gamma_k needs r_k <= r");
    if (lv.mu < 2) throw Error(ErrorKind::OutOfRange, "gamma_k needs mu >= 2");

    const int k = narrow(ctx.k, "k");
    const int slots = narrow(ctx.t + ctx.k, "t + k");
    const int r_k = narrow(lv.r_k, "r_k");
    const int mu = narrow(lv.mu, "mu");
    const int alpha = narrow(lv.alpha, "alpha");
    const int l = narrow(ell, "ell");
    const std::int64_t kappa = (lv.r_k - lv.alpha) / (lv.mu - 1);
    const std::int64_t gamma = (lv.r_k - lv.alpha) % (lv.mu - 1);
    const std::int64_t singles = ctx.t + ctx.k - 1 - (lv.alpha + kappa * lv.mu + gamma);

    GammaLayout layout;
    layout.p = narrow(ctx.p, "p");
    std::string path;
    std::vector<std::string> notes;
    const std::string paper_attempt = "kappa=" + str(kappa) + ", gamma=" + str(gamma) + ", singles=" + str(singles);

    if (singles >= 0 && kappa >= lv.alpha) {
        path = "paper";
        layout.clusters.insert(layout.clusters.end(), static_cast<std::size_t>(alpha), ClusterSpec{mu + 1});
        layout.clusters.insert(layout.clusters.end(), static_cast<std::size_t>(kappa - alpha), ClusterSpec{mu});
        layout.clusters.push_back(ClusterSpec{static_cast<int>(gamma) + 1});
        layout.singles = static_cast<int>(singles);
    } else {
        path = "generalized";
        const int parts = slots - r_k;
        if (parts < 1) throw Error(ErrorKind::InfeasibleAssembly, "r_k >= t + k; paper attempt " + paper_attempt);
        std::vector<int> chosen, fallback;
        std::size_t budget = kPartitionBudget;
        std::size_t examined = 0;
        std::vector<int> prefix;
        for_each_partition(slots, parts, mu + 1, prefix,
                           [&](const std::vector<int>& part) {
                               ++examined;
                               const int top = std::accumulate(part.begin(), part.begin() + std::min<int>(l, parts), 0);
                               if (top > k - 1) return true;
                               const int top_next =
                                   std::accumulate(part.begin(), part.begin() + std::min<int>(l + 1, parts), 0);
                               if (top_next >= k) {
                                   chosen = part;
                                   return false;
                               }
                               if (fallback.empty()) fallback = part;
                               return true;
                           },
                           budget);
        if (chosen.empty()) chosen = fallback;
        if (chosen.empty())
            throw Error(ErrorKind::InfeasibleAssembly,
                        "no cluster multiset fits: paper attempt " + paper_attempt + "; generalized search examined " +
                            str(static_cast<std::int64_t>(examined)) + " partitions of " + str(slots) + " into " +
                            str(parts) + " parts <= " + str(mu + 1));
        for (int c : chosen) {
            if (c >= 2) layout.clusters.push_back(ClusterSpec{c});
            else ++layout.singles;
        }
        notes.push_back("paper decomposition infeasible (" + paper_attempt + ")");
    }

    Witness w = gamma_from_layout(layout, k, WitnessFamily::GammaK);
    w.spec.assembly = path;
    w.spec.notes = std::move(notes);
    w.spec.parameters["ell"] = ell;
    w.spec.parameters["mu"] = lv.mu;
    w.spec.parameters["alpha"] = lv.alpha;
    w.spec.parameters["r_k"] = lv.r_k;
    if (path == "paper") {
        w.spec.parameters["kappa"] = kappa;
        w.spec.parameters["gamma"] = gamma;
    }
    return w;
}

Witness gamma_3(const ParamContext& ctx) {
    require_sigma_two(ctx);
    const std::int64_t r3 = ctx.t * ctx.p + ctx.t + 2 - ctx.n;
    if (2 * r3 > ctx.t + 3)
        throw Error(ErrorKind::InfeasibleAssembly, "gamma_3 needs 2 r_3 <= t + 3; r_3 = " + str(r3) + ", t = " + str(ctx.t));
    if (r3 < 0) throw Error(ErrorKind::InfeasibleAssembly, "negative r_3 = " + str(r3));
    GammaLayout layout;
    layout.clusters.assign(static_cast<std::size_t>(r3), ClusterSpec{2});
    layout.singles = narrow(ctx.t + 3 - 2 * r3, "singles");
    layout.p = narrow(ctx.p, "p");
    Witness w = gamma_from_layout(layout, 3, WitnessFamily::Gamma3);
    w.spec.parameters["r_3"] = r3;
    return w;
}

Witness gamma_3_prime(const ParamContext& ctx) {
    require_sigma_two(ctx);
    const std::int64_t r3 = ctx.t * ctx.p + ctx.t + 2 - ctx.n;
    if (2 * r3 <= ctx.t + 3)
        throw Error(ErrorKind::InfeasibleAssembly,
                    "gamma_3_prime needs 2 r_3 > t + 3; r_3 = " + str(r3) + ", t = " + str(ctx.t));
    GammaLayout layout;
    layout.clusters.push_back(ClusterSpec{narrow(ctx.t + 3 - ctx.q, "petals")});
    layout.singles = narrow(ctx.q, "q");
    layout.p = narrow(ctx.p, "p");
    Witness w = gamma_from_layout(layout, 3, WitnessFamily::Gamma3Prime);
    w.spec.parameters["r_3"] = r3;
    return w;
}

Witness extend_with_kp(const Witness& base, int p) {
    if (!is_gamma_family(base.spec.family) || !base.spec.layout)
        throw Error(ErrorKind::OutOfRange, std::string("cannot extend a ") + std::string(to_string(base.spec.family)));
    if (p != base.spec.layout->p) throw Error(ErrorKind::OutOfRange, "extension p differs from the layout's p");
    GammaLayout layout = *base.spec.layout;
    ++layout.small;
    Witness w = gamma_from_layout(layout, base.spec.k + 1, WitnessFamily::Extended);
    w.spec.assembly = base.spec.assembly;
    w.spec.notes = base.spec.notes;
    w.spec.parameters["base_family"] = std::string(to_string(base.spec.family));
    w.spec.parameters["base_claimed_min_union"] = base.spec.claimed_min_union;
    return w;
}

Witness lower_bound_witness(const ParamContext& ctx) {
    const Prediction pred = predict(ctx);
    const int t = narrow(ctx.t, "t");
    const int k = narrow(ctx.k, "k");
    const int p = narrow(ctx.p, "p");
    const int q = narrow(ctx.q, "q");
    const int m = narrow(ctx.m, "m");
    const std::int64_t n = ctx.n;

    const auto case_ii_flower = [&] {
        return flower(narrow(ctx.p + *ctx.sigma - 1, "center"), t + k - 1 - q, p + 1, q, k);
    };

    Witness w;
    switch (classify(ctx)) {
        case CaseKind::K1:
            w = static_cast<std::int64_t>(t) * (m - 1) >= n + p ? disjoint_cliques(t, m - 1, 1)
                                                               : flower(p + 1, t - q, p + 1, q, 1);
            break;
        case CaseKind::CaseI:
            w = static_cast<std::int64_t>(t + k - 1) * (m - 1) >= n + static_cast<std::int64_t>(k) * p + k - 1
                    ? disjoint_cliques(t + k - 1, m - 1, k)
                    : flower(p + k, t + k - 1 - q, p + 1, q, k);
            break;
        case CaseKind::CaseII:
            w = case_ii_flower();
            break;
        default: {
            const TraceLevel& top = pred.trace.back();
            if (k == 3) {
                w = 2 * top.r_k <= ctx.t + 3 ? gamma_3(ctx) : gamma_3_prime(ctx);
            } else if (top.r_k_within_r) {
                w = gamma_k(ctx, top.ell);
            } else if (top.ell == *ctx.sigma - 1) {
                w = case_ii_flower();
            } else {
                ParamContext lower = ctx;
                lower.k = ctx.k - 1;
                lower.sigma = ctx.p >= ctx.m - lower.k ? std::optional<std::int64_t>(ctx.m - ctx.p) : std::nullopt;
                Witness base = lower_bound_witness(lower);
                if (!base.spec.layout)
                    throw Error(ErrorKind::InfeasibleAssembly,
                                "k = " + str(k) + ": r_k > r with ell != sigma - 1 but the k - 1 witness is " +
                                    std::string(to_string(base.spec.family)));
                w = extend_with_kp(base, p);
            }
        }
    }
    w.spec.claimed_cm_free_up_to = ctx.m;
    if (w.graph.order() != pred.g - 1)
        throw Error(ErrorKind::InfeasibleAssembly, "witness order " + str(w.graph.order()) + " != g - 1 = " + str(pred.g - 1));
    return w;
}

nlohmann::ordered_json to_json(const WitnessSpec& spec) {
    nlohmann::ordered_json j;
    j["family"] = std::string(to_string(spec.family));
    j["parameters"] = spec.parameters;
    j["claimed_order"] = spec.claimed_order;
    j["claimed_min_union"] = spec.claimed_min_union;
    j["claimed_cm_free_up_to"] = spec.claimed_cm_free_up_to;
    j["k"] = spec.k;
    j["declared_duplication"] = spec.declared_duplication;
    j["assembly"] = spec.assembly;
    j["notes"] = spec.notes;
    return j;
}

WitnessSpec witness_spec_from_json(const nlohmann::json& j) {
    try {
        WitnessSpec spec;
        const auto family = j.at("family").get<std::string>();
        bool known = false;
        for (auto f : {WitnessFamily::DisjointCliques, WitnessFamily::Flower, WitnessFamily::GammaAbc,
                       WitnessFamily::GammaK, WitnessFamily::Gamma3, WitnessFamily::Gamma3Prime, WitnessFamily::Extended}) {
            if (to_string(f) == family) {
                spec.family = f;
                known = true;
            }
        }
        if (!known) throw Error(ErrorKind::ParseError, "unknown witness family " + family);
        spec.parameters = nlohmann::ordered_json::parse(j.at("parameters").dump());
        spec.claimed_order = j.at("claimed_order").get<std::int64_t>();
        spec.claimed_min_union = j.at("claimed_min_union").get<std::int64_t>();
        spec.claimed_cm_free_up_to = j.at("claimed_cm_free_up_to").get<std::int64_t>();
        spec.k = j.value("k", 1);
        spec.declared_duplication = j.value("declared_duplication", std::int64_t{0});
        spec.assembly = j.value("assembly", std::string("direct"));
        spec.notes = j.value("notes", std::vector<std::string>{});
        if (is_gamma_family(spec.family) && spec.parameters.contains("clusters")) {
            GammaLayout layout;
            for (const auto& c : spec.parameters.at("clusters")) layout.clusters.push_back({c.at("petals").get<int>()});
            layout.singles = spec.parameters.at("b").get<int>();
            layout.small = spec.parameters.at("c").get<int>();
            layout.p = spec.parameters.at("p").get<int>();
            spec.layout = layout;
        }
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

BundlePaths write_bundle(const Witness& w, const std::filesystem::path& dir, const std::string& name) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    BundlePaths paths{dir / (name + ".g6"), dir / (name + ".json")};
    {
        std::ofstream out(paths.graph6);
        if (!out) throw std::runtime_error("cannot write " + paths.graph6.string());
        out << to_graph6(w.graph) << '\n';
        if (!out) throw std::runtime_error("write failed for " + paths.graph6.string());
    }
    {
        std::ofstream out(paths.spec);
        if (!out) throw std::runtime_error("cannot write " + paths.spec.string());
        out << to_json(w.spec).dump(2) << '\n';
        if (!out) throw std::runtime_error("write failed for " + paths.spec.string());
    }
    return paths;
}

}  // namespace cbramsey
