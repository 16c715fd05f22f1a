#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cbramsey/graph.hpp"

namespace cbramsey::oracle {

/// Relabelling that minimises the graph6 bit sequence, with the resulting
/// graph6 string as the isomorphism-class key.
struct CanonicalForm {
    std::string key;
    std::vector<int> labeling;  ///< labeling[i] = original vertex placed at position i
};

CanonicalForm canonical_form(const Graph& g);

/// One representative (in canonical form) per isomorphism class on
/// `order` vertices, sorted by key. Refuses orders above 8.
std::vector<Graph> nonisomorphic_graphs(int order);

/// Every labelled graph on `order` <= 6 vertices, in edge-mask order.
void for_each_labeled_graph(int order, const std::function<void(const Graph&)>& visit);

struct ArrowResult {
    bool arrows = false;
    /// "cycle", "book" or "none".
    std::string reason = "none";
    std::vector<int> cycle;
    std::vector<int> book_spine;
    std::vector<int> book_pages;
};

/// Decides whether g contains C_m or its complement contains the book
/// B_n^(k), by exhaustive search only.
ArrowResult arrows(const Graph& g, int m, int n, int k);

struct ExhaustiveResult {
    bool all_arrow = false;
    std::optional<Graph> counterexample;
    std::uint64_t graphs_examined = 0;
    /// "isomorphism-classes" or "labeled".
    std::string mode;
};

struct EnumerationOptions {
    bool up_to_isomorphism = true;
    std::uint64_t budget = 50'000'000;
};

/// Whether every graph on N vertices arrows. The counterexample is the
/// least canonical key among non-arrowing graphs. Throws ResourceLimit
/// above N = 8 (N = 6 for labelled enumeration) or past the budget.
ExhaustiveResult ramsey_exhaustive(int m, int n, int k, int N, const EnumerationOptions& opts = {});

struct TinyRamsey {
    std::optional<int> value;
    /// value, or N_max + 1 when every scanned N has a counterexample.
    int lower_bound = 1;
    std::vector<ExhaustiveResult> scan;
};

TinyRamsey ramsey_number_tiny(int m, int n, int k, int n_max, const EnumerationOptions& opts = {});

nlohmann::ordered_json scan_entry_json(int m, int n, int k, int N, const ExhaustiveResult& r);

}  // namespace cbramsey::oracle
