#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cbramsey/graph.hpp"
#include "cbramsey/rational.hpp"

namespace cbramsey {

/// Finite sets over a shared integer universe. Each set is kept sorted and
/// free of repeats.
struct SetFamily {
    std::vector<std::vector<int>> sets;

    SetFamily() = default;
    explicit SetFamily(std::vector<std::vector<int>> raw);

    std::size_t size() const { return sets.size(); }
};

/// Sum of set sizes minus the size of the union.
std::int64_t dup_number(const SetFamily& f);
/// Throws EmptyFamily for a family with no sets.
Rational dup_rate(const SetFamily& f);

enum class Lemma44Verdict { Holds, Vacuous, Violated };

struct Lemma44Result {
    Lemma44Verdict verdict = Lemma44Verdict::Vacuous;
    std::int64_t dup = 0;
    int h = 0;
    /// First set meeting the union of the others in fewer than two elements.
    int failing_set = -1;
};

/// If every set meets the union of the others in at least two elements,
/// the duplication number must reach the family size.
Lemma44Result lemma44_check(const SetFamily& f);

struct SubfamilyDup {
    std::int64_t value = 0;
    std::vector<int> indices;
};

/// Brute force over all k-subfamilies; ties go to the lexicographically least index set.
SubfamilyDup max_k_subfamily_dup(const SetFamily& f, int k);

/// The bound r = ((mu-1)/mu)(t+k-alpha) + alpha*mu with k-1 = mu*ell + alpha.
Rational lemma45_bound(int t, int k, int ell);

/// Alpha clusters of mu+1 sets and ell-alpha clusters of mu sets cover k-1
/// sets; the remaining t+1 sets are grouped in clusters of at most mu. A
/// cluster shares exactly one element and every set has p+1 elements.
SetFamily cluster_pattern(int t, int k, int ell, int p);

struct Lemma45Report {
    int t = 0, k = 0, ell = 0, p = 0;
    int universe_bound = 0;
    std::int64_t mu = 0, alpha = 0;
    Rational r;
    /// "exhaustive" or "sampled".
    std::string regime;
    std::uint64_t families_examined = 0;
    std::int64_t max_dup_found = 0;
    SetFamily best_family;
    bool bound_violated = false;
    std::int64_t pattern_dup = 0;
    bool pattern_satisfies_hypothesis = false;
    bool pattern_attains_floor = false;
};

/// Searches families of t+k sets of size p+1 whose every k-subfamily has
/// union at least kp+ell+1, for the largest duplication number. Exhaustive
/// up to `budget` search nodes, otherwise seeded random sampling.
Lemma45Report lemma45_probe(int t, int k, int ell, int p, int universe_bound, std::uint64_t budget = 50'000'000,
                            std::uint64_t seed = 1);

/// Maximal cliques of a block-clique graph, one set per block.
SetFamily family_from_blocks(const Graph& g);

nlohmann::ordered_json to_json(const SetFamily& f);
SetFamily family_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const Lemma45Report& report);

}  // namespace cbramsey
