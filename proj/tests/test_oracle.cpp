#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cbramsey/error.hpp"
#include "cbramsey/graph_io.hpp"
#include "cbramsey/oracle.hpp"

using namespace cbramsey;

TEST(Canonical, ClassCounts) {
    const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n) EXPECT_EQ(oracle::nonisomorphic_graphs(n).size(), expected[n]) << n;
    EXPECT_THROW(oracle::nonisomorphic_graphs(9), Error);
}

TEST(Canonical, LabelingReproducesKey) {
    const Graph g = petersen();
    const auto cf = oracle::canonical_form(g);
    EXPECT_EQ(to_graph6(g.induced(cf.labeling)), cf.key);
}

TEST(Canonical, InvariantUnderRelabelProperty) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int order = std::uniform_int_distribution<int>(1, 10)(rng);
        GraphBuilder b(order);
        for (int j = 1; j < order; ++j)
            for (int i = 0; i < j; ++i)
                if (unit(rng) < 0.45) b.add_edge(i, j);
        const Graph g = std::move(b).build();
        std::vector<int> perm(static_cast<std::size_t>(order));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(oracle::canonical_form(g).key, oracle::canonical_form(g.relabeled(perm)).key);
    }
}

TEST(Canonical, TwoRegularOnSix) {
    // K_{3,3} minus a perfect matching is a 6-cycle; two triangles are not.
    GraphBuilder b(6);
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j)
            if (j != i + 3) b.add_edge(i, j);
    EXPECT_EQ(oracle::canonical_form(cycle_graph(6)).key, oracle::canonical_form(std::move(b).build()).key);
    const std::vector<Graph> two_triangles{clique(3), clique(3)};
    EXPECT_NE(oracle::canonical_form(cycle_graph(6)).key, oracle::canonical_form(disjoint_union(two_triangles)).key);
}

TEST(Arrows, Reasons) {
    const auto c = oracle::arrows(cycle_graph(4), 4, 1, 1);
    EXPECT_TRUE(c.arrows);
    EXPECT_EQ(c.reason, "cycle");
    EXPECT_EQ(c.cycle.size(), 4u);
    const auto b = oracle::arrows(edgeless(3), 4, 2, 1);
    EXPECT_TRUE(b.arrows);
    EXPECT_EQ(b.reason, "book");
    EXPECT_EQ(b.book_pages.size(), 2u);
    EXPECT_FALSE(oracle::arrows(clique(3), 4, 2, 1).arrows);
}

TEST(Tiny, RamseyValues) {
    EXPECT_EQ(oracle::ramsey_number_tiny(4, 1, 1, 6).value, 4);
    EXPECT_EQ(oracle::ramsey_number_tiny(4, 2, 1, 6).value, 4);
    EXPECT_EQ(oracle::ramsey_number_tiny(6, 1, 1, 7).value, 6);
    EXPECT_EQ(oracle::ramsey_number_tiny(4, 1, 2, 7).value, 7);
}

TEST(Tiny, LabeledAgreesWithClasses) {
    for (int N = 1; N <= 5; ++N) {
        oracle::EnumerationOptions lab;
        lab.up_to_isomorphism = false;
        const auto a = oracle::ramsey_exhaustive(4, 1, 2, N);
        const auto b = oracle::ramsey_exhaustive(4, 1, 2, N, lab);
        EXPECT_EQ(a.all_arrow, b.all_arrow) << N;
        EXPECT_EQ(b.mode, "labeled");
    }
}

TEST(Tiny, CounterexampleIsMinimalKeyAndNonArrowing) {
    const auto r = oracle::ramsey_exhaustive(6, 2, 2, 6);
    ASSERT_FALSE(r.all_arrow);
    ASSERT_TRUE(r.counterexample.has_value());
    EXPECT_FALSE(oracle::arrows(*r.counterexample, 6, 2, 2).arrows);
    const auto j = oracle::scan_entry_json(6, 2, 2, 6, r);
    EXPECT_EQ(j["verdict"], "COUNTEREXAMPLE");
    EXPECT_EQ(j["counterexample"], to_graph6(*r.counterexample));
}

TEST(Tiny, RefusesLargeScans) {
    EXPECT_THROW(oracle::ramsey_exhaustive(4, 1, 1, 9), Error);
    oracle::EnumerationOptions lab;
    lab.up_to_isomorphism = false;
    EXPECT_THROW(oracle::ramsey_exhaustive(4, 1, 1, 7, lab), Error);
}
