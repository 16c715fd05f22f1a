#include "cbramsey/setfamily.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_map>

#include "cbramsey/error.hpp"

namespace cbramsey {

namespace {

std::vector<std::uint32_t> subsets_of_size(int n, int k) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask)
        if (std::popcount(mask) == k) out.push_back(mask);
    return out;
}

struct ProbeSearch {
    int sets;
    int cap;
    int limit;
    std::vector<std::uint32_t> edges;
    std::vector<std::uint32_t> ksubsets;
    std::vector<int> load;
    std::vector<int> seen;
    std::vector<std::uint32_t> chosen;
    std::int64_t dup = 0;

    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::int64_t best = -1;
    std::vector<std::uint32_t> best_edges;

    bool fits(std::uint32_t e) const {
        for (int i = 0; i < sets; ++i)
            if ((e >> i & 1U) && load[static_cast<std::size_t>(i)] >= cap) return false;
        for (std::size_t j = 0; j < ksubsets.size(); ++j) {
            const int over = std::popcount(e & ksubsets[j]) - 1;
            if (over > 0 && seen[j] + over > limit) return false;
        }
        return true;
    }

    void apply(std::uint32_t e, int sign) {
        for (int i = 0; i < sets; ++i)
            if (e >> i & 1U) load[static_cast<std::size_t>(i)] += sign;
        for (std::size_t j = 0; j < ksubsets.size(); ++j) {
            const int over = std::popcount(e & ksubsets[j]) - 1;
            if (over > 0) seen[j] += sign * over;
        }
        dup += sign * (std::popcount(e) - 1);
        if (sign > 0) chosen.push_back(e);
        else chosen.pop_back();
    }

    void record() {
        if (dup > best) {
            best = dup;
            best_edges = chosen;
        }
    }

    void descend(std::size_t from) {
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        record();
        for (std::size_t i = from; i < edges.size() && !exhausted; ++i) {
            if (!fits(edges[i])) continue;
            apply(edges[i], +1);
            descend(i);
            apply(edges[i], -1);
        }
    }

    void sample(std::mt19937_64& rng, std::uint64_t rounds) {
        std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
        for (std::uint64_t r = 0; r < rounds; ++r) {
            int stale = 0;
            while (stale < 64) {
                const std::uint32_t e = edges[pick(rng)];
                if (fits(e)) {
                    apply(e, +1);
                    stale = 0;
                } else {
                    ++stale;
                }
            }
            record();
            while (!chosen.empty()) apply(chosen.back(), -1);
        }
    }

    SetFamily materialize(int p) const {
        std::vector<std::vector<int>> raw(static_cast<std::size_t>(sets));
        int next = 0;
        for (std::uint32_t e : best_edges) {
            for (int i = 0; i < sets; ++i)
                if (e >> i & 1U) raw[static_cast<std::size_t>(i)].push_back(next);
            ++next;
        }
        for (auto& s : raw)
            while (static_cast<int>(s.size()) < p + 1) s.push_back(next++);
        return SetFamily(std::move(raw));
    }
};

}  // namespace

SetFamily::SetFamily(std::vector<std::vector<int>> raw) : sets(std::move(raw)) {
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
}

std::int64_t dup_number(const SetFamily& f) {
    std::int64_t total = 0;
    std::vector<int> all;
    for (const auto& s : f.sets) {
        total += static_cast<std::int64_t>(s.size());
        all.insert(all.end(), s.begin(), s.end());
    }
    std::sort(all.begin(), all.end());
    return total - (std::unique(all.begin(), all.end()) - all.begin());
}

Rational dup_rate(const SetFamily& f) {
    if (f.sets.empty()) throw Error(ErrorKind::EmptyFamily, "duplication rate of an empty family");
    return {dup_number(f), static_cast<std::int64_t>(f.sets.size())};
}

Lemma44Result lemma44_check(const SetFamily& f) {
    Lemma44Result r;
    r.h = static_cast<int>(f.size());
    r.dup = dup_number(f);
    std::unordered_map<int, int> count;
    for (const auto& s : f.sets)
        for (int x : s) ++count[x];
    for (std::size_t i = 0; i < f.sets.size(); ++i) {
        const auto shared = std::count_if(f.sets[i].begin(), f.sets[i].end(), [&](int x) { return count[x] >= 2; });
        if (shared < 2) {
            r.failing_set = static_cast<int>(i);
            r.verdict = Lemma44Verdict::Vacuous;
            return r;
        }
    }
    r.verdict = r.dup >= r.h ? Lemma44Verdict::Holds : Lemma44Verdict::Violated;
    return r;
}

SubfamilyDup max_k_subfamily_dup(const SetFamily& f, int k) {
    const int h = static_cast<int>(f.size());
    if (k < 1 || k > h) throw Error(ErrorKind::OutOfRange, "need 1 <= k <= family size");
    SubfamilyDup best{-1, {}};
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        SetFamily sub;
        for (int i : idx) sub.sets.push_back(f.sets[static_cast<std::size_t>(i)]);
        const std::int64_t d = dup_number(sub);
        if (d > best.value) best = {d, idx};
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == h - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return best;
}

Rational lemma45_bound(int t, int k, int ell) {
    if (k < 2 || ell < 1 || ell > k - 1) throw Error(ErrorKind::OutOfRange, "need k >= 2 and 1 <= ell <= k-1");
    const std::int64_t mu = (k - 1) / ell;
    const std::int64_t alpha = (k - 1) % ell;
    return Rational((mu - 1) * (t + k - alpha), mu) + Rational(alpha * mu);
}

SetFamily cluster_pattern(int t, int k, int ell, int p) {
    if (t < 1 || p < 0) throw Error(ErrorKind::OutOfRange, "need t >= 1, p >= 0");
    lemma45_bound(t, k, ell);
    const int mu = (k - 1) / ell;
    const int alpha = (k - 1) % ell;
    std::vector<int> sizes;
    sizes.insert(sizes.end(), static_cast<std::size_t>(alpha), mu + 1);
    sizes.insert(sizes.end(), static_cast<std::size_t>(ell - alpha), mu);
    for (int left = t + 1; left > 0; left -= mu) sizes.push_back(std::min(mu, left));

    std::vector<std::vector<int>> raw;
    int next = 0;
    for (int c : sizes) {
        const int shared = next++;
        for (int i = 0; i < c; ++i) {
            std::vector<int> s{shared};
            for (int j = 0; j < p; ++j) s.push_back(next++);
            raw.push_back(std::move(s));
        }
    }
    return SetFamily(std::move(raw));
}

Lemma45Report lemma45_probe(int t, int k, int ell, int p, int universe_bound, std::uint64_t budget, std::uint64_t seed) {
    Lemma45Report rep;
    rep.t = t;
    rep.k = k;
    rep.ell = ell;
    rep.p = p;
    rep.universe_bound = universe_bound;
    rep.r = lemma45_bound(t, k, ell);
    rep.mu = (k - 1) / ell;
    rep.alpha = (k - 1) % ell;
    const int sets = t + k;
    if (t < 1 || p < 1 || sets > 16) throw Error(ErrorKind::OutOfRange, "probe needs t >= 1, p >= 1, t + k <= 16");

    ProbeSearch s;
    s.sets = sets;
    s.cap = p + 1;
    s.limit = k - ell - 1;
    for (std::uint32_t mask = 1; mask < (1U << sets); ++mask)
        if (std::popcount(mask) >= 2) s.edges.push_back(mask);
    s.ksubsets = subsets_of_size(sets, k);
    s.load.assign(static_cast<std::size_t>(sets), 0);
    s.seen.assign(s.ksubsets.size(), 0);
    s.budget = budget;

    // The union is (t+k)(p+1) - dup, so the universe bound is a floor on dup.
    const std::int64_t min_dup = static_cast<std::int64_t>(sets) * (p + 1) - universe_bound;

    s.descend(0);
    rep.families_examined = std::min(s.nodes, budget);
    if (s.exhausted) {
        rep.regime = "sampled";
        std::mt19937_64 rng(seed);
        const std::uint64_t rounds = std::max<std::uint64_t>(budget / 1000, 1000);
        s.sample(rng, rounds);
        rep.families_examined += rounds;
    } else {
        rep.regime = "exhaustive";
    }
    if (s.best >= std::max<std::int64_t>(min_dup, 0)) {
        rep.max_dup_found = s.best;
        rep.best_family = s.materialize(p);
    }
    rep.bound_violated = Rational(rep.max_dup_found) > rep.r;

    const SetFamily pattern = cluster_pattern(t, k, ell, p);
    rep.pattern_dup = dup_number(pattern);
    rep.pattern_satisfies_hypothesis = max_k_subfamily_dup(pattern, k).value <= k - ell - 1;
    rep.pattern_attains_floor = rep.pattern_dup == rep.r.floor();
    return rep;
}

SetFamily family_from_blocks(const Graph& g) { return SetFamily(blocks(g).blocks); }

nlohmann::ordered_json to_json(const SetFamily& f) {
    auto j = nlohmann::ordered_json::array();
    for (const auto& s : f.sets) j.push_back(s);
    return j;
}

SetFamily family_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "set family must be a JSON array");
    std::vector<std::vector<int>> raw;
    try {
        for (const auto& s : j) raw.push_back(s.get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    return SetFamily(std::move(raw));
}

nlohmann::ordered_json to_json(const Lemma45Report& report) {
    nlohmann::ordered_json j;
    j["t"] = report.t;
    j["k"] = report.k;
    j["ell"] = report.ell;
    j["p"] = report.p;
    j["mu"] = report.mu;
    j["alpha"] = report.alpha;
    j["r"] = report.r.str();
    j["regime"] = report.regime;
    j["families_examined"] = report.families_examined;
    j["max_dup_found"] = report.max_dup_found;
    j["bound_violated"] = report.bound_violated;
    j["pattern_dup"] = report.pattern_dup;
    j["pattern_satisfies_hypothesis"] = report.pattern_satisfies_hypothesis;
    j["pattern_attains_floor"] = report.pattern_attains_floor;
    j["best_family"] = to_json(report.best_family);
    return j;
}

}  // namespace cbramsey
