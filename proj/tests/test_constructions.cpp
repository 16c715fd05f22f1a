#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "cbramsey/constructions.hpp"
#include "cbramsey/error.hpp"
#include "cbramsey/graph_io.hpp"
#include "cbramsey/verify.hpp"

using namespace cbramsey;

TEST(Constructions, DisjointCliques) {
    const Witness w = disjoint_cliques(3, 4, 3);
    EXPECT_EQ(w.graph.order(), 12);
    EXPECT_EQ(w.graph.edge_count(), 18u);
    EXPECT_EQ(w.spec.claimed_min_union, 9);
    EXPECT_EQ(min_union_neighborhood(w.graph, 3).value, 9);
    EXPECT_EQ(w.spec.declared_duplication, 0);
}

TEST(Constructions, FlowerLayout) {
    const Witness w = flower(4, 2, 3, 1);
    EXPECT_EQ(w.graph.order(), 4 + 2 * 2 + 3);
    EXPECT_TRUE(is_block_clique(w.graph));
    EXPECT_EQ(w.spec.declared_duplication, 2);
    EXPECT_THROW(flower(2, 3, 3, 0), Error);
}

TEST(Constructions, GammaLayoutCounts) {
    GammaLayout l;
    l.clusters = {{3}, {2}};
    l.singles = 1;
    l.small = 2;
    l.p = 4;
    EXPECT_EQ(l.order(), (1 + 3 * 4) + (1 + 2 * 4) + 5 + 2 * 4);
    EXPECT_EQ(l.duplication(), 3);
    const Witness w = gamma_from_layout(l, 3, WitnessFamily::GammaK);
    EXPECT_EQ(w.graph.order(), l.order());
    EXPECT_TRUE(is_block_clique(w.graph));
    EXPECT_EQ(min_union_neighborhood(w.graph, 3).value, gamma_min_union(l, 3));
}

struct FamilyRow {
    int t, k, n, m;
    WitnessFamily family;
    const char* assembly;
    int order;
    std::int64_t min_union;
};

class DispatchTest : public ::testing::TestWithParam<FamilyRow> {};

TEST_P(DispatchTest, FrozenWitness) {
    const FamilyRow r = GetParam();
    const ParamContext ctx = validate(r.t, r.k, r.n, r.m);
    const Witness w = lower_bound_witness(ctx);
    EXPECT_EQ(w.spec.family, r.family);
    EXPECT_EQ(w.spec.assembly, r.assembly);
    EXPECT_EQ(w.graph.order(), r.order);
    EXPECT_EQ(w.graph.order(), predict(ctx).g - 1);
    EXPECT_EQ(w.spec.claimed_min_union, r.min_union);
    EXPECT_EQ(min_union_neighborhood(w.graph, r.k).value, r.min_union);
    EXPECT_FALSE(cm_free_structural(w.graph, r.m).found());
}

INSTANTIATE_TEST_SUITE_P(
    Families, DispatchTest,
    ::testing::Values(FamilyRow{2, 1, 12, 12, WitnessFamily::DisjointCliques, "direct", 22, 10},
                      FamilyRow{2, 1, 16, 12, WitnessFamily::Flower, "direct", 23, 7},
                      FamilyRow{2, 3, 21, 12, WitnessFamily::Gamma3Prime, "direct", 51, 28},
                      FamilyRow{2, 3, 22, 12, WitnessFamily::Gamma3, "direct", 53, 29},
                      FamilyRow{2, 4, 21, 12, WitnessFamily::GammaK, "generalized", 62, 38},
                      FamilyRow{2, 4, 22, 12, WitnessFamily::Extended, "direct", 63, 38},
                      FamilyRow{2, 5, 20, 12, WitnessFamily::GammaK, "paper", 67, 43}));

TEST(Constructions, InfeasibleAssemblyIsReported) {
    const ParamContext ctx = validate(2, 6, 19, 12);
    try {
        lower_bound_witness(ctx);
        FAIL() << "expected InfeasibleAssembly";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InfeasibleAssembly);
        EXPECT_NE(std::string(e.what()).find("generalized search"), std::string::npos);
    }
}

TEST(Constructions, ExtendAddsOneSmallClique) {
    const Witness base = lower_bound_witness(validate(2, 3, 22, 12));
    const Witness ext = extend_with_kp(base, 10);
    EXPECT_EQ(ext.graph.order(), base.graph.order() + 10);
    EXPECT_EQ(ext.spec.k, 4);
    EXPECT_EQ(min_union_neighborhood(ext.graph, 4).value, ext.spec.claimed_min_union);
}

TEST(Constructions, GammaMinUnionProperty) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        GammaLayout l;
        l.p = std::uniform_int_distribution<int>(2, 4)(rng);
        const int nc = std::uniform_int_distribution<int>(0, 3)(rng);
        for (int i = 0; i < nc; ++i) l.clusters.push_back({std::uniform_int_distribution<int>(1, 3)(rng)});
        l.singles = std::uniform_int_distribution<int>(0, 2)(rng);
        l.small = std::uniform_int_distribution<int>(0, 2)(rng);
        const int k = std::uniform_int_distribution<int>(1, 4)(rng);
        int comps = l.singles + l.small;
        for (const auto& c : l.clusters) comps += c.petals;
        if (comps < k) continue;
        const Witness w = gamma_from_layout(l, k, WitnessFamily::GammaK);
        EXPECT_EQ(min_union_neighborhood(w.graph, k).value, gamma_min_union(l, k)) << trial;
    }
}

TEST(Constructions, FlowerMinUnionProperty) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 150; ++trial) {
        const int center = std::uniform_int_distribution<int>(1, 5)(rng);
        const int attached = std::uniform_int_distribution<int>(0, center)(rng);
        const int leaf = std::uniform_int_distribution<int>(2, 5)(rng);
        const int extra = std::uniform_int_distribution<int>(0, 3)(rng);
        const int k = std::uniform_int_distribution<int>(1, 4)(rng);
        // Independence number: one per leaf, plus a free center vertex if any.
        if (attached + extra + (center > attached ? 1 : 0) < k) {
            EXPECT_THROW(flower(center, attached, leaf, extra, k), Error);
            continue;
        }
        const Witness w = flower(center, attached, leaf, extra, k);
        EXPECT_EQ(min_union_neighborhood(w.graph, k).value, flower_min_union(center, attached, leaf, extra, k))
            << center << ' ' << attached << ' ' << leaf << ' ' << extra << ' ' << k;
    }
}

TEST(Constructions, SpecJsonRoundTrip) {
    const Witness w = lower_bound_witness(validate(2, 5, 20, 12));
    const WitnessSpec back = witness_spec_from_json(to_json(w.spec));
    EXPECT_EQ(nlohmann::json(to_json(back)), nlohmann::json(to_json(w.spec)));
    ASSERT_TRUE(back.layout.has_value());
    EXPECT_EQ(back.layout->order(), w.graph.order());
    EXPECT_THROW(witness_spec_from_json(nlohmann::json{{"family", "NOPE"}}), Error);
}

TEST(Constructions, BundleOnDisk) {
    const auto dir = std::filesystem::temp_directory_path() / "cbramsey_bundle";
    const Witness w = lower_bound_witness(validate(2, 2, 21, 12));
    const BundlePaths paths = write_bundle(w, dir, "w");
    EXPECT_EQ(read_graph_file(paths.graph6.string()), w.graph);
    std::ifstream in(paths.spec);
    EXPECT_EQ(nlohmann::json::parse(in)["claimed_order"], w.graph.order());
}
