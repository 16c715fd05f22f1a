#include <gtest/gtest.h>

#include <random>

#include "cbramsey/constructions.hpp"
#include "cbramsey/error.hpp"
#include "cbramsey/generators.hpp"
#include "cbramsey/verify.hpp"

using namespace cbramsey;

namespace {

Graph gnp(Rng& rng, int order, double q) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    GraphBuilder b(order);
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i)
            if (unit(rng) < q) b.add_edge(i, j);
    return std::move(b).build();
}

}  // namespace

TEST(CycleSearch, SmallGraphs) {
    EXPECT_TRUE(has_cycle_of_length(cycle_graph(6), 6).found());
    EXPECT_FALSE(has_cycle_of_length(cycle_graph(6), 4).found());
    EXPECT_FALSE(has_cycle_of_length(petersen(), 4).found());
    EXPECT_TRUE(has_cycle_of_length(petersen(), 6).found());
    EXPECT_TRUE(has_cycle_of_length(petersen(), 8).found());
    EXPECT_FALSE(has_cycle_of_length(complete_bipartite(3, 5), 8).found());
    EXPECT_TRUE(has_cycle_of_length(complete_bipartite(3, 5), 6).found());
}

TEST(CycleSearch, CertificateIsValid) {
    const Graph g = clique(7);
    const Certificate c = has_cycle_of_length(g, 6);
    ASSERT_TRUE(c.found());
    EXPECT_EQ(c.cycle.size(), 6u);
    EXPECT_FALSE(check_certificate(g, c).has_value());
    Certificate bad = c;
    bad.cycle.pop_back();
    EXPECT_TRUE(check_certificate(g, bad).has_value());
}

TEST(CycleSearch, BudgetThrows) {
    SearchLimits tight;
    tight.cycle_expansion_budget = 10;
    try {
        has_cycle_of_length(petersen(), 10, tight);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ResourceLimit);
    }
}

TEST(CycleSearch, AgreesWithSpectrumProperty) {
    Rng rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = gnp(rng, std::uniform_int_distribution<int>(3, 11)(rng), 0.35);
        const auto spec = cycle_spectrum(g);
        for (int m = 3; m <= g.order(); ++m) {
            const bool in = std::find(spec.begin(), spec.end(), m) != spec.end();
            EXPECT_EQ(has_cycle_of_length(g, m).found(), in) << trial << " m=" << m;
        }
    }
}

TEST(Structural, BlockCliqueCertificates) {
    const std::vector<Graph> parts{clique(5), clique(3)};
    const Graph g = disjoint_union(parts);
    EXPECT_FALSE(cm_free_structural(g, 6).found());
    const Certificate hit = cm_free_structural(g, 4);
    ASSERT_TRUE(hit.found());
    EXPECT_FALSE(check_certificate(g, hit).has_value());
    EXPECT_THROW(cm_free_structural(cycle_graph(5), 4), Error);
}

TEST(MinUnion, KnownValues) {
    const std::vector<Graph> parts{clique(4), clique(4), clique(4)};
    EXPECT_EQ(min_union_neighborhood(disjoint_union(parts), 3).value, 9);
    EXPECT_EQ(min_union_neighborhood(cycle_graph(6), 3).value, 3);
    EXPECT_EQ(min_union_neighborhood(cycle_graph(6), 2).value, 3);
    EXPECT_THROW(min_union_neighborhood(clique(4), 2), Error);
}

TEST(MinUnion, ThreadsAndComponentsAgreeProperty) {
    Rng rng(19);
    for (int trial = 0; trial < 120; ++trial) {
        const Graph g = random_block_clique(rng, std::uniform_int_distribution<int>(4, 22)(rng), 5);
        const int k = std::uniform_int_distribution<int>(1, 4)(rng);
        if (independent_sets(g, k).empty()) continue;
        const MinUnion a = min_union_neighborhood(g, k, 1);
        const MinUnion b = min_union_neighborhood(g, k, 3);
        EXPECT_EQ(a.value, b.value);
        EXPECT_EQ(a.set, b.set);
        EXPECT_EQ(min_union_by_components(g, k).value, a.value);
    }
}

TEST(Book, FreeAndFound) {
    const std::vector<Graph> parts{clique(4), clique(4), clique(4)};
    const Graph g = disjoint_union(parts);
    // min union 9 over 12 vertices: an independent triple misses 0 outsiders.
    EXPECT_FALSE(complement_book_free(g, 1, 3).found());
    const Graph e = edgeless(6);
    const Certificate c = complement_book_free(e, 3, 2);
    ASSERT_TRUE(c.found());
    EXPECT_FALSE(check_certificate(e, c).has_value());
    EXPECT_GE(c.common_non_neighbors.size(), 3u);
}

TEST(Book, ExhaustiveMatchesStructuralProperty) {
    Rng rng(23);
    for (int trial = 0; trial < 120; ++trial) {
        const Graph g = random_block_clique(rng, std::uniform_int_distribution<int>(4, 20)(rng), 5);
        const int k = std::uniform_int_distribution<int>(1, 3)(rng);
        const std::int64_t n = std::uniform_int_distribution<int>(1, 8)(rng);
        SearchLimits structural;
        structural.book_subset_budget = 0;
        EXPECT_EQ(complement_book_free(g, n, k).found(), complement_book_free(g, n, k, structural).found())
            << trial;
    }
}

TEST(Spectrum, KnownGraphs) {
    EXPECT_EQ(cycle_spectrum(petersen()), (std::vector<int>{5, 6, 8, 9}));
    EXPECT_EQ(even_cycle_spectrum(petersen()), (std::vector<int>{6, 8}));
    EXPECT_EQ(longest_cycle(path_graph(5)), 0);
    EXPECT_EQ(longest_even_cycle(cycle_graph(7)), 0);
    EXPECT_EQ(longest_cycle(clique(6)), 6);
    SearchLimits small;
    small.spectrum_max_order = 5;
    EXPECT_THROW(cycle_spectrum(clique(6), small), Error);
}

TEST(Report, WitnessPassesAndTamperedFails) {
    const ParamContext ctx = validate(2, 3, 22, 12);
    const Witness w = lower_bound_witness(ctx);
    const WitnessReport ok = verify_witness(w.graph, w.spec, ctx);
    EXPECT_TRUE(ok.pass);
    EXPECT_TRUE(ok.failures.empty());

    WitnessSpec wrong = w.spec;
    wrong.claimed_order += 1;
    EXPECT_FALSE(verify_witness(w.graph, wrong, ctx).pass);

    const WitnessReport big = verify_witness(clique(53), w.spec, ctx);
    EXPECT_FALSE(big.pass);
    EXPECT_TRUE(big.cm.found());
}

TEST(Report, ModesAgreeOnSmallWitness) {
    const ParamContext ctx = validate(2, 1, 4, 4);
    const Witness w = lower_bound_witness(ctx);
    for (VerifyMode mode : {VerifyMode::Auto, VerifyMode::Exhaustive, VerifyMode::Structural})
        EXPECT_TRUE(verify_witness(w.graph, w.spec, ctx, {}, mode).pass);
    const auto j = to_json(verify_witness(w.graph, w.spec, ctx, {}, VerifyMode::Exhaustive));
    EXPECT_EQ(j["cm"]["kind"], "CM_FREE_EXHAUSTIVE");
}
