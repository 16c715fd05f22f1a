#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cbramsey/constructions.hpp"
#include "cbramsey/formula.hpp"
#include "cbramsey/graph.hpp"

namespace cbramsey {

enum class CertificateKind { CmFreeStructural, CmFreeExhaustive, CmFound, BookFree, BookFound };

std::string_view to_string(CertificateKind kind);

/// Checkable evidence for or against one witness property.
///
/// CmFound carries a cycle of length m as a vertex sequence. BookFound
/// carries an independent k-set and every vertex adjacent to none of it.
/// The free kinds carry the extremal value reached: the largest block for
/// the structural cycle route, and for books a lower bound on the neighbourhood
/// union of every independent k-set (exact when `independent_set` is set).
struct Certificate {
    CertificateKind kind = CertificateKind::CmFreeExhaustive;
    std::string method;
    int m = 0;
    std::int64_t n = 0;
    int k = 0;
    std::vector<int> cycle;
    std::vector<int> independent_set;
    std::vector<int> common_non_neighbors;
    std::int64_t extremal_value = 0;

    bool found() const { return kind == CertificateKind::CmFound || kind == CertificateKind::BookFound; }
};

struct SearchLimits {
    int spectrum_max_order = 14;
    /// Exhaustive book checks run when C(order, k) is at most this.
    std::uint64_t book_subset_budget = 10'000'000;
    std::uint64_t cycle_expansion_budget = 200'000'000;
    int threads = 1;
};

Certificate has_cycle_of_length(const Graph& g, int m, const SearchLimits& limits = {});

/// Throws NotBlockClique unless every block induces a clique.
Certificate cm_free_structural(const Graph& g, int m);

struct MinUnion {
    std::int64_t value = 0;
    std::vector<int> set;
};

/// Exact minimum of |N(u_1) ∪ ... ∪ N(u_k)| over independent k-sets,
/// with the lexicographically least minimiser. `threads` > 1 splits the
/// search by leading vertex; the result does not depend on it.
MinUnion min_union_neighborhood(const Graph& g, int k, int threads = 1);

/// Same value computed component by component and combined by min-plus
/// convolution. The witness set is a minimiser, not necessarily the least.
MinUnion min_union_by_components(const Graph& g, int k);

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap);

Certificate complement_book_free(const Graph& g, std::int64_t n, int k, const SearchLimits& limits = {});

/// Lengths of all cycles; order must not exceed limits.spectrum_max_order.
std::vector<int> cycle_spectrum(const Graph& g, const SearchLimits& limits = {});
std::vector<int> even_cycle_spectrum(const Graph& g, const SearchLimits& limits = {});
/// 0 for forests.
int longest_cycle(const Graph& g, const SearchLimits& limits = {});
int longest_even_cycle(const Graph& g, const SearchLimits& limits = {});

/// Re-validates a certificate against the raw graph. Empty on success,
/// otherwise the first failed check.
std::optional<std::string> check_certificate(const Graph& g, const Certificate& cert);

struct WitnessReport {
    std::int64_t expected_order = 0;
    int order = 0;
    bool order_ok = false;
    Certificate cm;
    std::optional<Certificate> cm_cross_check;
    Certificate book;
    std::vector<std::string> failures;
    double cm_ms = 0;
    double book_ms = 0;
    bool pass = false;
};

/// Auto uses the structural cycle certificate on block-clique graphs and an
/// exhaustive book check within budget. Exhaustive never takes a structural
/// shortcut; Structural never enumerates the whole graph.
enum class VerifyMode { Auto, Exhaustive, Structural };

WitnessReport verify_witness(const Graph& g, const WitnessSpec& spec, const ParamContext& ctx,
                             const SearchLimits& limits = {}, VerifyMode mode = VerifyMode::Auto);

nlohmann::ordered_json to_json(const Certificate& cert);
nlohmann::ordered_json to_json(const WitnessReport& report);

}  // namespace cbramsey
